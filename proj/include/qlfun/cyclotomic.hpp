#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qlfun/precision.hpp"
#include "qlfun/rational.hpp"
#include "qlfun/real.hpp"

namespace qlfun {

// e^{2 pi i angle} with a rational angle kept in lowest terms in [0,1).
// Group arithmetic is exact (angles add mod 1); realization to a Complex
// happens only at output precision.
struct RootOfUnity {
  mpq_class angle;

  static RootOfUnity of(const mpq_class& a);
  static RootOfUnity one() { return of(0); }

  RootOfUnity operator*(const RootOfUnity& o) const { return of(angle + o.angle); }
  RootOfUnity conj() const { return of(-angle); }
  RootOfUnity pow(long e) const { return of(angle * e); }
  bool is_one() const { return angle == 0; }

  Complex realize(mpfr_prec_t prec) const;
};

// Exact finite sum  sum_a c_a e^{2 pi i a}  with rational coefficients on
// rational angles.  Zero and rationality tests reduce the representation
// modulo the cyclotomic polynomial of the common angle denominator, so they
// are exact, not numeric.
class CycloValue {
 public:
  static CycloValue zero() { return CycloValue(); }
  static CycloValue rational(const mpq_class& c);
  static CycloValue root(const RootOfUnity& r);

  void add_scaled(const RootOfUnity& r, const mpq_class& coeff);
  CycloValue& operator+=(const CycloValue& o);
  void scale(const mpq_class& c);
  CycloValue times_root(const RootOfUnity& r) const;
  CycloValue conj() const;

  bool empty() const { return terms_.empty(); }
  bool is_zero() const;
  bool equals(const CycloValue& o) const;
  // Exact value as a rational if the reduced representation is degree zero.
  std::optional<mpq_class> as_rational() const;

  Complex realize(mpfr_prec_t prec) const;

 private:
  std::map<mpq_class, mpq_class> terms_;  // normalized angle -> coefficient
};

namespace detail {
// Coefficients of the m-th cyclotomic polynomial, low order first; memoized.
std::vector<mpz_class> cyclotomic_poly(unsigned long m);
}  // namespace detail

}  // namespace qlfun
