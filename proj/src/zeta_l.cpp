#include "qlfun/zeta_l.hpp"

#include <numeric>

#include "qlfun/classical.hpp"

namespace qlfun {

const char* route_name(Route r) {
  switch (r) {
    case Route::Series: return "series";
    case Route::NegInt: return "negint";
    case Route::Decomposition: return "decomposition";
    case Route::Expansion: return "expansion";
    case Route::Recurrence: return "recurrence";
    case Route::Explicit: return "explicit";
    case Route::Binomial: return "binomial";
    case Route::Closed: return "closed";
  }
  return "?";
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Exact: return "exact";
    case Mode::Certified: return "certified";
    case Mode::Heuristic: return "heuristic";
  }
  return "?";
}

namespace {

Real of_mpz(const mpz_class& z, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

// bracket^{-s}, taking the integer-exponent fast path when s is a small
// real integer.
struct BracketPow {
  bool int_path = false;
  long neg_s = 0;
  Complex minus_s;

  static BracketPow of(const Complex& s, mpfr_prec_t bits) {
    BracketPow p;
    if (s.imag_is_zero() && s.re.is_integer() && abs(s.re) < Real::of_long(1L << 30, bits)) {
      p.int_path = true;
      p.neg_s = -s.re.to_long();
    }
    p.minus_s = -s;
    return p;
  }

  Complex apply(const Real& bracket) const {
    if (int_path) return Complex(pow_si(bracket, neg_s));
    return cpow(bracket, minus_s);
  }
};

// |bracket^{-s}| over the whole summation range: brackets increase toward
// 1/(1-q), and stay >= the first bracket of the sum.
Real bracket_pow_bound(const Real& first_bracket, const Complex& s, const QParam& q) {
  Real re = s.re;
  if (re.sgn() >= 0) return cpow_r(first_bracket, -re);
  return cpow_r(q.one_minus_q_inv(), -re);
}

// s = -n for a nonnegative integer n, else usage_error.
long negint_order(const Complex& s) {
  if (!s.imag_is_zero() || !s.re.is_integer())
    throw usage_error("negint route requires s to be a nonpositive real integer");
  long n = -s.re.to_long();
  if (n < 0) throw usage_error("negint route requires s <= 0");
  return n;
}

mpq_class interpolation_ratio(long n, unsigned r) {
  // n!/(n+r)! = 1/((n+1)...(n+r))
  return 1 / mpq_class(falling_z(static_cast<unsigned long>(n) + r, r));
}

EvalResult zeta_series(unsigned r, const Complex& s, const mpq_class& x, const QParam& q,
                       const PrecisionCtx& ctx) {
  mpfr_prec_t bits = ctx.bits();
  Real qx = exp(ctx.rational(x) * q.log_q());
  Real bx = qbracket(x, q, ctx);
  Real c_tail = qx * bracket_pow_bound(bx, s, q);
  auto plan = detail::certified_tail(q.value(), r - 1, ctx.tol_work() / c_tail, ctx.max_terms,
                                     bits);
  BracketPow bp = BracketPow::of(s, bits);
  Complex sum = Complex::zero(bits);
  Real one = ctx.real(1);
  Real qp = qx;
  mpz_class bc = 1;  // binom(M+r-1, r-1)
  for (long m = 0; m < plan.n; ++m) {
    Real bracket = (one - qp) * q.one_minus_q_inv();
    sum += bp.apply(bracket) * (of_mpz(bc, bits) * qp);
    qp *= q.value();
    bc *= m + r;
    mpz_divexact_ui(bc.get_mpz_t(), bc.get_mpz_t(), m + 1);
  }
  Real bound = c_tail * plan.bound + detail::rounding_bound(abs(sum), ctx);
  return {sum, bound, Route::Series, plan.n, Mode::Certified, false, false};
}

}  // namespace

EvalResult multi_qzeta(unsigned r, const Complex& s, const mpq_class& x, const QParam& q,
                       Route route, const PrecisionCtx& ctx) {
  if (r == 0) throw domain_error("multi_qzeta: r must be >= 1");
  if (!(x > 0)) throw domain_error("multi_qzeta: x must be > 0");
  switch (route) {
    case Route::Series:
      return zeta_series(r, s, x, q, ctx);
    case Route::NegInt: {
      long n = negint_order(s);
      Certified b = multi_b(static_cast<unsigned>(n) + r, r, x, q, PolyRoute::Series, ctx);
      mpq_class ratio = interpolation_ratio(n, r);
      if (r % 2) ratio = -ratio;
      Real w = ctx.rational(ratio);
      EvalResult res{Complex(b.value * w), b.bound * abs(w), Route::NegInt, b.terms,
                     Mode::Certified, false, n == 0};
      return res;
    }
    default:
      throw usage_error("multi_qzeta: route must be series or negint");
  }
}

namespace detail {

EvalResult h_by_total(unsigned r, const Complex& s, unsigned long total_a, unsigned long big_f,
                      const QParam& q, Route route, const PrecisionCtx& ctx,
                      ExpansionForm form) {
  mpfr_prec_t bits = ctx.bits();
  QParam qF = q.pow(big_f, ctx);
  mpq_class x(static_cast<long>(total_a), static_cast<long>(big_f));
  x.canonicalize();
  Real bF = qbracket(mpq_class(static_cast<long>(big_f)), q, ctx);

  switch (route) {
    case Route::Series: {
      EvalResult inner = multi_qzeta(r, s, x, qF, Route::Series, ctx);
      Complex pref = cpow(bF, Complex(-s.re, -s.im));
      Real pm = abs(pref);
      return {pref * inner.value, pm * inner.error_bound +
                  rounding_bound(abs(inner.value) * pm, ctx),
              Route::Series, inner.terms_used, Mode::Certified, false, false};
    }
    case Route::NegInt: {
      long n = negint_order(s);
      Certified b = multi_b(static_cast<unsigned>(n) + r, r, x, qF, PolyRoute::Series, ctx);
      mpq_class ratio = interpolation_ratio(n, r);
      if (r % 2) ratio = -ratio;
      Real w = ctx.rational(ratio) * pow_si(bF, n);
      return {Complex(b.value * w), b.bound * abs(w), Route::NegInt, b.terms, Mode::Certified,
              false, n == 0};
    }
    case Route::Expansion: {
      for (unsigned j = 1; j <= r; ++j) {
        Real d = hypot(s.re - static_cast<long>(j), s.im);
        if (d < Real::of_double(ctx.pole_radius, bits))
          throw pole_error("expansion route within pole_radius of s = " + std::to_string(j));
      }
      Real bA = qbracket(mpq_class(static_cast<long>(total_a)), q, ctx);
      // prefactor: [A]^{r-s} / (prod_j (s-j)) / [F]^r, and for the
      // consistent form the power q^{A(1-r)} that the base change forces
      Complex pref = cpow(bA, Complex(Real::of_long(r, bits) - s.re, -s.im));
      Complex den{Real::of_long(1, bits), Real(bits)};
      for (unsigned j = 1; j <= r; ++j) den = den * (s - Complex(ctx.real(j)));
      pref = pref / den;
      pref = pref / pow_si(bF, r);
      const QParam& coeff_base = (form == ExpansionForm::Consistent) ? qF : q;
      if (form == ExpansionForm::Consistent && r > 1)
        pref = pref * pow_si(pow_si(q.value(), static_cast<long>(total_a)),
                             1 - static_cast<long>(r));
      Real rho = pow_si(q.value(), static_cast<long>(total_a)) * bF / bA;

      // Terms below k = r vanish identically (the order-r coefficients start
      // at k = r), so the sum starts there; including them would poison the
      // smallest-term tracking with zeros.
      Complex z{Real::of_long(r, bits) - s.re, -s.im};  // upper index of the binomial
      Complex bin{ctx.real(1), Real(bits)};
      Real rho_k = ctx.real(1);
      for (unsigned j = 0; j < r; ++j) {
        bin = bin * (z - Complex(ctx.real(j))) / ctx.real(static_cast<long>(j) + 1);
        rho_k *= rho;
      }
      std::vector<Complex> partial;
      std::vector<Real> tmag;
      Complex acc = Complex::zero(bits);
      long k_min = static_cast<long>(r);
      Real t_min = Real::pos_inf(bits);
      long kcap = std::min<long>(ctx.max_terms, 20000);
      long k = static_cast<long>(r);
      for (; k <= kcap; ++k) {
        Certified bk = multi_b_zero(r, coeff_base, static_cast<unsigned>(k), ctx);
        Complex term = bin * (rho_k * bk.value);
        acc += term;
        partial.push_back(acc);
        Real mag = abs(term);
        tmag.push_back(mag);
        if (mag < t_min) {
          t_min = mag;
          k_min = k;
        }
        if (mag <= ctx.tol_work() * (ctx.real(1) + abs(acc))) break;  // converged
        if (k >= k_min + 8 && mag > t_min * 100L) break;              // asymptotic turn
        // advance binom(z, k) -> binom(z, k+1) and rho^k
        bin = bin * (z - Complex(ctx.real(k))) / ctx.real(k + 1);
        rho_k *= rho;
      }
      std::size_t cut = static_cast<std::size_t>(k_min - static_cast<long>(r));
      Complex value = pref * partial[cut];
      Real bound = abs(pref) * tmag[cut] + rounding_bound(abs(value), ctx);
      return {value, bound, Route::Expansion, k_min + 1, Mode::Heuristic, false, false};
    }
    default:
      throw usage_error("H: route must be series, negint or expansion");
  }
}

}  // namespace detail

EvalResult h_func(unsigned r, const Complex& s, const std::vector<unsigned long>& a,
                  unsigned long big_f, const QParam& q, Route route, const PrecisionCtx& ctx,
                  ExpansionForm form) {
  if (r == 0) throw domain_error("H: r must be >= 1");
  if (big_f == 0) throw domain_error("H: F must be >= 1");
  if (a.size() != r) throw domain_error("H: need exactly r residues a_1..a_r");
  unsigned long total = 0;
  for (unsigned long ai : a) {
    if (ai < 1 || ai > big_f)
      throw domain_error("H: residues must satisfy 1 <= a_i <= F");
    total += ai;
  }
  return detail::h_by_total(r, s, total, big_f, q, route, ctx, form);
}

EvalResult l_func(unsigned r, const Complex& s, const DirichletCharacter& chi, const QParam& q,
                  Route route, const PrecisionCtx& ctx, ExpansionForm form) {
  if (r == 0) throw domain_error("L: r must be >= 1");
  mpfr_prec_t bits = ctx.bits();
  unsigned long f = chi.modulus();
  bool principal = chi.principal();

  switch (route) {
    case Route::Series: {
      // one realized value per residue class
      std::vector<Complex> chiv;
      std::vector<bool> chiz;
      chiv.reserve(f);
      for (unsigned long a = 0; a < f; ++a) {
        CharValue cv = chi.eval(static_cast<long long>(a));
        chiz.push_back(cv.zero);
        chiv.push_back(cv.realize(bits));
      }
      Real br = qbracket(mpq_class(static_cast<long>(r)), q, ctx);
      Real c_tail = pow_si(q.value(), r) * bracket_pow_bound(br, s, q);
      auto plan = detail::certified_tail(q.value(), r - 1, ctx.tol_work() / c_tail,
                                         ctx.max_terms, bits);
      BracketPow bp = BracketPow::of(s, bits);
      Complex sum = Complex::zero(bits);
      Real one = ctx.real(1);
      Real qp = pow_si(q.value(), r);
      mpz_class bc = 1;  // binom(m-1, r-1) at m = r
      for (long i = 0; i < plan.n; ++i) {
        unsigned long m = static_cast<unsigned long>(i) + r;
        if (!chiz[m % f]) {
          Real bracket = (one - qp) * q.one_minus_q_inv();
          sum += chiv[m % f] * (bp.apply(bracket) * (of_mpz(bc, bits) * qp));
        }
        qp *= q.value();
        bc *= static_cast<unsigned long>(m);
        mpz_divexact_ui(bc.get_mpz_t(), bc.get_mpz_t(), m - r + 1);
      }
      Real bound = c_tail * plan.bound + detail::rounding_bound(abs(sum), ctx);
      return {sum, bound, Route::Series, plan.n, Mode::Certified, principal, false};
    }
    case Route::Decomposition: {
      auto counts = composition_counts(r, f);
      Complex acc = Complex::zero(bits);
      Real bound(bits);
      long terms = 0;
      for (std::size_t i = 0; i < counts.size(); ++i) {
        unsigned long total = r + i;
        CharValue cv = chi.eval(static_cast<long long>(total));
        if (cv.zero) continue;
        EvalResult hA = detail::h_by_total(r, s, total, f, q, Route::Series, ctx, form);
        Real cnt = of_mpz(counts[i], bits);
        acc += cv.realize(bits) * (cnt * hA.value);
        bound += cnt * hA.error_bound;
        terms += hA.terms_used;
      }
      bound += detail::rounding_bound(abs(acc), ctx);
      return {acc, bound, Route::Decomposition, terms, Mode::Certified, principal, false};
    }
    case Route::NegInt: {
      long n = negint_order(s);
      CertifiedC b = multi_gen_beta_chi(static_cast<unsigned>(n) + r, r, chi, q,
                                        ChiRoute::Series, ctx);
      mpq_class ratio = interpolation_ratio(n, r);
      if (r % 2) ratio = -ratio;
      Real w = ctx.rational(ratio);
      return {b.value * w, b.bound * abs(w), Route::NegInt, b.terms, Mode::Certified,
              principal, n == 0};
    }
    case Route::Expansion: {
      auto counts = composition_counts(r, f);
      Complex acc = Complex::zero(bits);
      Real bound(bits);
      long terms = 0;
      for (std::size_t i = 0; i < counts.size(); ++i) {
        unsigned long total = r + i;
        CharValue cv = chi.eval(static_cast<long long>(total));
        if (cv.zero) continue;
        EvalResult hA = detail::h_by_total(r, s, total, f, q, Route::Expansion, ctx, form);
        Real cnt = of_mpz(counts[i], bits);
        acc += cv.realize(bits) * (cnt * hA.value);
        bound += cnt * hA.error_bound;
        terms = std::max(terms, hA.terms_used);
      }
      return {acc, bound, Route::Expansion, terms, Mode::Heuristic, principal, false};
    }
    default:
      throw usage_error("L: route must be series, decomposition, negint or expansion");
  }
}

}  // namespace qlfun
