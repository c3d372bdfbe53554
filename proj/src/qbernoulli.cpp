#include "qlfun/qbernoulli.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "qlfun/classical.hpp"

namespace qlfun {

namespace {

Real of_mpz(const mpz_class& z, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

std::string q_key(const mpq_class& q) { return q.get_str(); }

// beta_{0..n,q} by the recurrence, exact.
const std::vector<TowerElem>& beta_table(const mpq_class& q, unsigned n) {
  static std::mutex mu;
  static std::map<std::string, std::vector<TowerElem>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto& tab = tables[q_key(q)];
  if (tab.empty()) tab.push_back(TowerElem(0, 1));  // beta_0 = L
  while (tab.size() <= n) {
    unsigned m = static_cast<unsigned>(tab.size());
    if (m == 1) {
      // beta_0 + (q - 1) beta_1 = 1
      mpq_class inv = 1 / (1 - q);
      tab.push_back(TowerElem(-inv, inv));
      continue;
    }
    TowerElem acc;
    mpq_class qp = 1;
    for (unsigned i = 0; i < m; ++i) {
      acc = acc + tab[i].scaled(mpq_class(binom_z(m, i)) * qp);
      qp *= q;
    }
    // remaining coefficient of beta_m is q^m - 1
    tab.push_back(acc.scaled(1 / (1 - mpq_pow_ui(q, m))));
  }
  return tab;
}

TowerElem beta_explicit(unsigned n, const mpq_class& q) {
  mpq_class pref = mpq_pow_ui(1 / (1 - q), n);
  mpq_class a = 0;
  for (unsigned i = 1; i <= n; ++i) {
    mpq_class term = mpq_class(binom_z(n, i)) * mpq_class(static_cast<long>(i)) * (1 - q) /
                     (1 - mpq_pow_ui(q, i));
    if (i % 2) a -= term; else a += term;
  }
  return TowerElem(pref * a, pref);  // the i = 0 term carries L
}

// Numeric beta table for non-rational q.
std::vector<Real> beta_table_numeric(const QParam& q, unsigned n, const PrecisionCtx& ctx) {
  std::vector<Real> tab;
  tab.push_back(q.l_factor());
  Real one = ctx.real(1);
  while (tab.size() <= n) {
    unsigned m = static_cast<unsigned>(tab.size());
    if (m == 1) {
      tab.push_back((q.l_factor() - one) * q.one_minus_q_inv());
      continue;
    }
    Real acc(ctx.bits());
    Real qp = one;
    for (unsigned i = 0; i < m; ++i) {
      acc += of_mpz(binom_z(m, i), ctx.bits()) * qp * tab[i];
      qp *= q.value();
    }
    tab.push_back(acc / (one - pow_si(q.value(), m)));
  }
  return tab;
}

}  // namespace

TowerElem beta_q_exact(unsigned n, const mpq_class& q, BetaRoute route) {
  if (!(q > 0 && q < 1)) throw domain_error("beta_q_exact: q must lie in (0,1)");
  if (route == BetaRoute::Recurrence) return beta_table(q, n)[n];
  return beta_explicit(n, q);
}

TowerElem beta_recurrence_residual(unsigned n, const mpq_class& q) {
  const auto& tab = beta_table(q, n);
  TowerElem acc;
  mpq_class qp = 1;
  for (unsigned i = 0; i <= n; ++i) {
    acc = acc + tab[i].scaled(mpq_class(binom_z(n, i)) * qp);
    qp *= q;
  }
  acc = acc - tab[n];
  if (n == 1) acc = acc - TowerElem(1, 0);
  return acc;
}

Certified beta_q(unsigned n, const QParam& q, BetaRoute route, const PrecisionCtx& ctx) {
  if (q.exact()) {
    TowerElem t = beta_q_exact(n, q.rational(), route);
    Real v = t.realize(q, ctx);
    return {v, detail::rounding_bound(v, ctx), 0};
  }
  Real v(ctx.bits());
  if (route == BetaRoute::Recurrence) {
    v = beta_table_numeric(q, n, ctx)[n];
  } else {
    Real one = ctx.real(1);
    Real acc = q.l_factor();
    for (unsigned i = 1; i <= n; ++i) {
      Real term = of_mpz(binom_z(n, i), ctx.bits()) * Real::of_long(i, ctx.bits()) *
                  (one - q.value()) / (one - pow_si(q.value(), i));
      if (i % 2) acc -= term; else acc += term;
    }
    v = acc * pow_si(q.one_minus_q_inv(), n);
  }
  return {v, detail::rounding_bound(v, ctx), 0};
}

Certified beta_q_poly(unsigned n, const mpq_class& x, const QParam& q, PolyRoute route,
                      const PrecisionCtx& ctx) {
  if (x < 0) throw domain_error("beta_q_poly: x must be >= 0");
  mpfr_prec_t bits = ctx.bits();
  Real qx = (x == 0) ? ctx.real(1) : exp(ctx.rational(x) * q.log_q());

  if (route == PolyRoute::Binomial) {
    Real bx = qbracket(x, q, ctx);
    Real acc(bits);
    Real qxi = ctx.real(1);  // (q^x)^i
    for (unsigned i = 0; i <= n; ++i) {
      Real beta_i = beta_q(i, q, BetaRoute::Recurrence, ctx).value;
      acc += of_mpz(binom_z(n, i), bits) * qxi * beta_i * pow_si(bx, static_cast<long>(n - i));
      qxi *= qx;
    }
    return {acc, detail::rounding_bound(acc, ctx), 0};
  }

  // series route: L (1-q)^{-n} - n sum_m q^{m+x} [m+x]^{n-1}
  if (n == 0) {
    Real v = q.l_factor();
    return {v, detail::rounding_bound(v, ctx), 0};
  }
  Real c_tail = Real::of_long(n, bits) * qx * pow_si(q.one_minus_q_inv(), static_cast<long>(n) - 1);
  auto plan = detail::certified_tail(q.value(), 0, ctx.tol_work() / c_tail, ctx.max_terms, bits);
  Real sum(bits);
  Real qp = qx;
  Real one = ctx.real(1);
  for (long m = 0; m < plan.n; ++m) {
    Real bracket = (one - qp) * q.one_minus_q_inv();
    sum += qp * pow_si(bracket, static_cast<long>(n) - 1);
    qp *= q.value();
  }
  Real value = q.l_factor() * pow_si(q.one_minus_q_inv(), n) - Real::of_long(n, bits) * sum;
  Real bound = c_tail * plan.bound + detail::rounding_bound(value, ctx);
  return {value, bound, plan.n};
}

namespace detail {

namespace {

std::mutex b0_mu;
std::map<std::tuple<unsigned, std::string, long>, std::vector<Certified>> b0_tables;

void extend_b0(std::vector<Certified>& tab, unsigned r, const QParam& q, unsigned upto,
               const PrecisionCtx& ctx) {
  while (tab.size() <= upto)
    tab.push_back(multi_b(static_cast<unsigned>(tab.size()), r, mpq_class(0), q,
                          PolyRoute::Series, ctx));
}

}  // namespace

std::vector<Certified> multi_b_zero_table(unsigned r, const QParam& q, unsigned upto,
                                          const PrecisionCtx& ctx) {
  if (!q.exact()) {
    std::vector<Certified> tab;
    extend_b0(tab, r, q, upto, ctx);
    return tab;
  }
  std::lock_guard<std::mutex> lock(b0_mu);
  auto& tab = b0_tables[{r, q_key(q.rational()), static_cast<long>(ctx.bits())}];
  extend_b0(tab, r, q, upto, ctx);
  return tab;
}

Certified multi_b_zero(unsigned r, const QParam& q, unsigned k, const PrecisionCtx& ctx) {
  if (!q.exact()) return multi_b(k, r, mpq_class(0), q, PolyRoute::Series, ctx);
  std::lock_guard<std::mutex> lock(b0_mu);
  auto& tab = b0_tables[{r, q_key(q.rational()), static_cast<long>(ctx.bits())}];
  extend_b0(tab, r, q, k, ctx);
  return tab[k];
}

}  // namespace detail

Certified multi_b(unsigned n, unsigned r, const mpq_class& x, const QParam& q, PolyRoute route,
                  const PrecisionCtx& ctx) {
  if (r == 0) throw domain_error("multi_b: r must be >= 1");
  if (x < 0) throw domain_error("multi_b: x must be >= 0");
  mpfr_prec_t bits = ctx.bits();
  if (n < r) return {Real(bits), Real(bits), 0};

  if (route == PolyRoute::Binomial) {
    auto table = detail::multi_b_zero_table(r, q, n, ctx);
    Real qx = (x == 0) ? ctx.real(1) : exp(ctx.rational(x) * q.log_q());
    Real bx = qbracket(x, q, ctx);
    Real acc(bits), bound(bits);
    for (unsigned k = r; k <= n; ++k) {
      // exponent on q^x is x(k-r+1): forced by the series, reduces to
      // q^{xk} at r = 1
      Real w = of_mpz(binom_z(n, k), bits) * pow_si(bx, static_cast<long>(n - k)) *
               pow_si(qx, static_cast<long>(k - r + 1));
      acc += w * table[k].value;
      bound += abs(w) * table[k].bound;
    }
    return {acc, bound + detail::rounding_bound(acc, ctx), 0};
  }

  // series route: (-1)^r n!/(n-r)! sum_M binom(M+r-1, r-1) q^{x+M} [x+M]^{n-r}
  mpz_class fall = falling_z(n, r);
  Real qx = (x == 0) ? ctx.real(1) : exp(ctx.rational(x) * q.log_q());
  Real fall_r = of_mpz(fall, bits);
  Real c_tail = fall_r * qx * pow_si(q.one_minus_q_inv(), static_cast<long>(n - r));
  auto plan = detail::certified_tail(q.value(), r - 1, ctx.tol_work() / c_tail, ctx.max_terms,
                                     bits);
  Real sum(bits);
  Real one = ctx.real(1);
  Real qp = qx;
  mpz_class bc = 1;  // binom(M+r-1, r-1)
  for (long m = 0; m < plan.n; ++m) {
    Real bracket = (one - qp) * q.one_minus_q_inv();
    sum += of_mpz(bc, bits) * qp * pow_si(bracket, static_cast<long>(n - r));
    qp *= q.value();
    bc *= m + r;
    mpz_divexact_ui(bc.get_mpz_t(), bc.get_mpz_t(), m + 1);
  }
  Real value = fall_r * sum;
  if (r % 2) value = -value;
  Real bound = c_tail * plan.bound + detail::rounding_bound(value, ctx);
  return {value, bound, plan.n};
}

CertifiedC gen_beta_chi(unsigned n, const DirichletCharacter& chi, const QParam& q,
                        ChiRoute route, const PrecisionCtx& ctx) {
  mpfr_prec_t bits = ctx.bits();
  unsigned long f = chi.modulus();
  bool flagged = chi.principal();

  if (route == ChiRoute::Series) {
    if (n == 0) return {Complex::zero(bits), Real(bits), 0, flagged};
    QParam qf = q.pow(f, ctx);
    Real inv_pow = pow_si(q.one_minus_q_inv(), static_cast<long>(n) - 1);
    Real c_max = q.value() * inv_pow;
    Real target = ctx.tol_work() /
                  (Real::of_long(static_cast<long>(n * f), bits) * c_max);
    auto plan = detail::certified_tail(qf.value(), 0, target, ctx.max_terms, bits);
    Complex acc = Complex::zero(bits);
    Real one = ctx.real(1);
    Real bound(bits);
    long terms = 0;
    for (unsigned long a = 1; a <= f; ++a) {
      CharValue cv = chi.eval(static_cast<long long>(a));
      if (cv.zero) continue;
      Real inner(bits);
      Real qp = pow_si(q.value(), static_cast<long>(a));
      for (long m = 0; m < plan.n; ++m) {
        Real bracket = (one - qp) * q.one_minus_q_inv();
        inner += qp * pow_si(bracket, static_cast<long>(n) - 1);
        qp *= qf.value();
      }
      terms += plan.n;
      acc += cv.realize(bits) * inner;
      bound += pow_si(q.value(), static_cast<long>(a)) * inv_pow * plan.bound;
    }
    Complex value = -(acc * Real::of_long(n, bits));
    bound = bound * Real::of_long(n, bits) + detail::rounding_bound(abs(value), ctx);
    return {value, bound, terms, flagged};
  }

  // closed route: [f]^{n-1} sum_a chi(a) beta_{n,q^f}(a/f)
  QParam qf = q.pow(f, ctx);
  if (q.exact()) {
    // fully exact: beta_{n,q^f}(a/f) is a tower element over L' since
    // (q^f)^{a/f} = q^a stays rational
    const mpq_class& qr = q.rational();
    mpq_class bf = qbracket_exact(f, qr);
    CycloValue acyc = CycloValue::zero(), bcyc = CycloValue::zero();
    for (unsigned long a = 1; a <= f; ++a) {
      CharValue cv = chi.eval(static_cast<long long>(a));
      if (cv.zero) continue;
      mpq_class bx = qbracket_exact(a, qr) / bf;  // [a/f]_{q^f}
      TowerElem t;
      for (unsigned i = 0; i <= n; ++i) {
        TowerElem beta_i = beta_q_exact(i, qf.rational(), BetaRoute::Recurrence);
        mpq_class w = mpq_class(binom_z(n, i)) * mpq_pow_ui(qr, static_cast<unsigned long>(a) * i) *
                      mpq_pow_ui(bx, n - i);
        t = t + beta_i.scaled(w);
      }
      CycloValue ca = cv.cyclo();
      ca.scale(t.a);
      acyc += ca;
      CycloValue cb = cv.cyclo();
      cb.scale(t.b);
      bcyc += cb;
    }
    mpq_class pw = (n >= 1) ? mpq_pow_ui(bf, n - 1) : 1 / bf;
    acyc.scale(pw);
    bcyc.scale(pw);
    Complex value = acyc.realize(bits);
    if (!bcyc.is_zero()) value += bcyc.realize(bits) * qf.l_factor();
    return {value, detail::rounding_bound(abs(value), ctx), 0, flagged};
  }

  // numeric closed route
  Complex acc = Complex::zero(bits);
  Real bound(bits);
  long terms = 0;
  for (unsigned long a = 1; a <= f; ++a) {
    CharValue cv = chi.eval(static_cast<long long>(a));
    if (cv.zero) continue;
    Certified b = beta_q_poly(n, mpq_class(static_cast<long>(a), static_cast<long>(f)), qf,
                              PolyRoute::Binomial, ctx);
    acc += cv.realize(bits) * b.value;
    bound += b.bound;
    terms += b.terms;
  }
  Real bf = qbracket(mpq_class(static_cast<long>(f)), q, ctx);
  Real pw = pow_si(bf, static_cast<long>(n) - 1);
  Complex value = acc * pw;
  return {value, bound * abs(pw) + detail::rounding_bound(abs(value), ctx), terms, flagged};
}

CertifiedC multi_gen_beta_chi(unsigned n, unsigned r, const DirichletCharacter& chi,
                              const QParam& q, ChiRoute route, const PrecisionCtx& ctx,
                              ClosedExponent exponent) {
  if (r == 0) throw domain_error("multi_gen_beta_chi: r must be >= 1");
  mpfr_prec_t bits = ctx.bits();
  unsigned long f = chi.modulus();
  bool flagged = chi.principal();
  if (n < r) return {Complex::zero(bits), Real(bits), 0, flagged};

  if (route == ChiRoute::Series) {
    QParam qf = q.pow(f, ctx);
    auto counts = composition_counts(r, f);
    mpz_class fall = falling_z(n, r);
    Real fall_r = of_mpz(fall, bits);
    Real inv_pow = pow_si(q.one_minus_q_inv(), static_cast<long>(n - r));
    // sum of counts is f^r; A >= r makes q^A <= q^r
    Real c_total = fall_r * pow_si(q.value(), r) * inv_pow *
                   pow_si(Real::of_long(static_cast<long>(f), bits), r);
    auto plan = detail::certified_tail(qf.value(), r - 1, ctx.tol_work() / c_total,
                                       ctx.max_terms, bits);
    Complex acc = Complex::zero(bits);
    Real bound_inner(bits);
    Real one = ctx.real(1);
    long terms = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      unsigned long total = r + i;
      CharValue cv = chi.eval(static_cast<long long>(total));
      if (cv.zero) continue;
      Real inner(bits);
      Real qp = pow_si(q.value(), static_cast<long>(total));
      mpz_class bc = 1;
      for (long m = 0; m < plan.n; ++m) {
        Real bracket = (one - qp) * q.one_minus_q_inv();
        inner += of_mpz(bc, bits) * qp * pow_si(bracket, static_cast<long>(n - r));
        qp *= qf.value();
        bc *= m + r;
        mpz_divexact_ui(bc.get_mpz_t(), bc.get_mpz_t(), m + 1);
      }
      terms += plan.n;
      Real cnt = of_mpz(counts[i], bits);
      acc += cv.realize(bits) * (cnt * inner);
      bound_inner += cnt * pow_si(q.value(), static_cast<long>(total)) * inv_pow * plan.bound;
    }
    Complex value = acc * fall_r;
    if (r % 2) value = -value;
    Real bound = fall_r * bound_inner + detail::rounding_bound(abs(value), ctx);
    return {value, bound, terms, flagged};
  }

  // closed route: [F]^{n-r} sum_{a vec} chi(A) B^{(r)}_{n,q^F}(A/F),
  // collapsed over totals by composition counts
  QParam qF = q.pow(f, ctx);
  auto counts = composition_counts(r, f);
  Complex acc = Complex::zero(bits);
  Real bound(bits);
  long terms = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    unsigned long total = r + i;
    CharValue cv = chi.eval(static_cast<long long>(total));
    if (cv.zero) continue;
    Certified b = multi_b(n, r, mpq_class(static_cast<long>(total), static_cast<long>(f)), qF,
                          PolyRoute::Series, ctx);
    Real cnt = of_mpz(counts[i], bits);
    acc += cv.realize(bits) * (cnt * b.value);
    bound += cnt * b.bound;
    terms += b.terms;
  }
  long e = (exponent == ClosedExponent::DegreeMinusOrder) ? static_cast<long>(n - r)
                                                          : static_cast<long>(n);
  Real pw = pow_si(qbracket(mpq_class(static_cast<long>(f)), q, ctx), e);
  Complex value = acc * pw;
  return {value, bound * abs(pw) + detail::rounding_bound(abs(value), ctx), terms, flagged};
}

}  // namespace qlfun
