#pragma once

#include <cmath>

#include "qlfun/errors.hpp"
#include "qlfun/real.hpp"

namespace qlfun {

// Working-precision contract threaded through every evaluation.  `digits`
// is the reported decimal precision; all arithmetic runs at digits+guard
// decimal digits, and certified series tails are pushed below
// 10^-(digits+guard) so that reported values carry a rigorous bound.
struct PrecisionCtx {
  int digits = 50;
  int guard = 12;
  long max_terms = 2000000;
  double pole_radius = 1e-6;

  static PrecisionCtx make(int digits, int guard = 12, long max_terms = 2000000,
                           double pole_radius = 1e-6) {
    if (digits < 10) throw domain_error("PrecisionCtx: digits must be >= 10");
    if (guard < 5) throw domain_error("PrecisionCtx: guard must be >= 5");
    if (max_terms < 100) throw domain_error("PrecisionCtx: max_terms must be >= 100");
    if (!(pole_radius > 0)) throw domain_error("PrecisionCtx: pole_radius must be > 0");
    PrecisionCtx c;
    c.digits = digits;
    c.guard = guard;
    c.max_terms = max_terms;
    c.pole_radius = pole_radius;
    return c;
  }

  mpfr_prec_t bits() const {
    return static_cast<mpfr_prec_t>(std::ceil((digits + guard) * 3.3219280948873623)) + 32;
  }

  Real tol_report() const { return pow10(-digits, bits()); }            // 10^-digits
  Real tol_work() const { return pow10(-(digits + guard), bits()); }    // certified tail target
  // Relative tolerance of certified identity suites.
  Real rel_tolerance() const { return pow10(-(digits - 2 * guard), bits()); }

  Real real(long x) const { return Real::of_long(x, bits()); }
  Real rational(const mpq_class& x) const { return Real::of_rational(x, bits()); }
  Complex complex(long re, long im) const { return Complex(real(re), real(im)); }
};

}  // namespace qlfun
