#pragma once

#include "qlfun/qparam.hpp"

namespace qlfun {

// A value together with a certified bound on |true - value| and the number
// of series terms that produced it.  Finite exact computations report a
// pure rounding bound.
struct Certified {
  Real value;
  Real bound;
  long terms = 0;
};

struct CertifiedC {
  Complex value;
  Real bound;
  long terms = 0;
  bool flagged = false;  // principal-character or otherwise unasserted result
};

mpq_class qbracket_exact(unsigned long k, const mpq_class& q);

// [x]_q = (1 - q^x)/(1 - q) for real x >= 0; exact-rational path when x is
// an integer and q rational, numeric otherwise.
Real qbracket(const mpq_class& x, const QParam& q, const PrecisionCtx& ctx);

inline Real lfactor(const QParam& q) { return q.l_factor(); }

// base^e for base > 0, principal real-log branch.
Complex cpow(const Real& base, const Complex& e);
Real cpow_r(const Real& base, const Real& e);

// Smallest N (>= 1) with sum_{m>=N} (m+1)^d q^m <= target, certified by the
// closed geometric-with-polynomial bound; throws truncation_error if no
// N <= ctx.max_terms works.
long tail_cutoff(const QParam& q, unsigned poly_degree, const Real& target,
                 const PrecisionCtx& ctx);

namespace detail {

struct TailBound {
  long n;
  Real bound;
};

// Closed bound for sum_{m>=N} (m+1)^d base^m; +inf when the term ratio at N
// is not yet below 1.
Real tail_bound_at(const Real& base, unsigned d, long n, mpfr_prec_t bits);

TailBound certified_tail(const Real& base, unsigned d, const Real& target,
                         long max_terms, mpfr_prec_t bits);

// Rounding slack for finite computations: well below every suite tolerance,
// scaled to the magnitude of the result.
Real rounding_bound(const Real& magnitude, const PrecisionCtx& ctx);

}  // namespace detail

}  // namespace qlfun
