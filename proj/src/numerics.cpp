#include "qlfun/numerics.hpp"

namespace qlfun {

mpq_class qbracket_exact(unsigned long k, const mpq_class& q) {
  if (k == 0) return mpq_class(0);
  return (1 - mpq_pow_ui(q, k)) / (1 - q);
}

Real qbracket(const mpq_class& x, const QParam& q, const PrecisionCtx& ctx) {
  if (x < 0) throw domain_error("qbracket: x must be >= 0");
  if (q.exact() && is_integer(x) && x.get_num().fits_ulong_p())
    return ctx.rational(qbracket_exact(x.get_num().get_ui(), q.rational()));
  // (1 - q^x)/(1 - q) with q^x = exp(x log q)
  Real qx = exp(ctx.rational(x) * q.log_q());
  return (ctx.real(1) - qx) * q.one_minus_q_inv();
}

Real cpow_r(const Real& base, const Real& e) {
  if (!(base > Real::of_long(0, base.prec())))
    throw domain_error("cpow: base must be > 0");
  if (e.is_integer() && abs(e) < Real::of_long(1L << 30, e.prec()))
    return pow_si(base, e.to_long());
  return pow(base, e);
}

Complex cpow(const Real& base, const Complex& e) {
  if (!(base > Real::of_long(0, base.prec())))
    throw domain_error("cpow: base must be > 0");
  if (e.imag_is_zero()) return Complex(cpow_r(base, e.re));
  Real lb = log(base);
  Real mag = exp(e.re * lb);
  Real ang = e.im * lb;
  return {mag * cos(ang), mag * sin(ang)};
}

namespace detail {

Real tail_bound_at(const Real& base, unsigned d, long n, mpfr_prec_t bits) {
  Real one = Real::of_long(1, bits);
  Real ratio = base;
  if (d > 0) {
    Real grow = Real::of_long(n + 2, bits) / Real::of_long(n + 1, bits);
    ratio = base * pow_si(grow, static_cast<long>(d));
  }
  if (!(ratio < one)) return Real::pos_inf(bits);
  Real first = pow_si(base, n);
  if (d > 0) first *= pow_si(Real::of_long(n + 1, bits), static_cast<long>(d));
  return first / (one - ratio);
}

TailBound certified_tail(const Real& base, unsigned d, const Real& target,
                         long max_terms, mpfr_prec_t bits) {
  auto ok = [&](long n) {
    Real b = tail_bound_at(base, d, n, bits);
    return !b.is_inf() && b <= target;
  };
  if (ok(1)) return {1, tail_bound_at(base, d, 1, bits)};
  long hi = 2;
  while (hi <= max_terms && !ok(hi)) hi *= 2;
  if (hi > max_terms) {
    if (ok(max_terms)) {
      hi = max_terms;
    } else {
      Real best = tail_bound_at(base, d, max_terms, bits);
      throw truncation_error("certified truncation failed within max_terms",
                             best.to_string(8));
    }
  }
  // The bound is above target on the whole prefix, so the predicate flips
  // exactly once; binary search for the first passing N.
  long lo = hi / 2 + 1;
  while (lo < hi) {
    long mid = lo + (hi - lo) / 2;
    if (ok(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return {lo, tail_bound_at(base, d, lo, bits)};
}

Real rounding_bound(const Real& magnitude, const PrecisionCtx& ctx) {
  return (abs(magnitude) + Real::of_long(1, ctx.bits())) *
         pow10(-(ctx.digits + ctx.guard - 3), ctx.bits());
}

}  // namespace detail

long tail_cutoff(const QParam& q, unsigned poly_degree, const Real& target,
                 const PrecisionCtx& ctx) {
  if (!(target > Real(ctx.bits()))) throw domain_error("tail_cutoff: target must be > 0");
  return detail::certified_tail(q.value(), poly_degree, target, ctx.max_terms, ctx.bits()).n;
}

}  // namespace qlfun
