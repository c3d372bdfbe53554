#include "qlfun/cyclotomic.hpp"

#include <mutex>
#include <unordered_map>

namespace qlfun {

RootOfUnity RootOfUnity::of(const mpq_class& a) {
  mpq_class r = a;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  r -= mpq_class(fl);
  r.canonicalize();
  return RootOfUnity{r};
}

Complex RootOfUnity::realize(mpfr_prec_t prec) const {
  Real theta = Real::of_rational(angle, prec) * const_pi(prec) * 2L;
  return {cos(theta), sin(theta)};
}

CycloValue CycloValue::rational(const mpq_class& c) {
  CycloValue v;
  v.add_scaled(RootOfUnity::one(), c);
  return v;
}

CycloValue CycloValue::root(const RootOfUnity& r) {
  CycloValue v;
  v.add_scaled(r, 1);
  return v;
}

void CycloValue::add_scaled(const RootOfUnity& r, const mpq_class& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(r.angle);
  if (it == terms_.end()) {
    terms_.emplace(r.angle, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

CycloValue& CycloValue::operator+=(const CycloValue& o) {
  for (const auto& [a, c] : o.terms_) add_scaled(RootOfUnity{a}, c);
  return *this;
}

void CycloValue::scale(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& [a, coeff] : terms_) coeff *= c;
}

CycloValue CycloValue::times_root(const RootOfUnity& r) const {
  CycloValue v;
  for (const auto& [a, c] : terms_) v.add_scaled(RootOfUnity::of(a + r.angle), c);
  return v;
}

CycloValue CycloValue::conj() const {
  CycloValue v;
  for (const auto& [a, c] : terms_) v.add_scaled(RootOfUnity::of(-a), c);
  return v;
}

namespace detail {

namespace {

// Exact division of integer polynomials, num / den with den monic-leading.
std::vector<mpz_class> poly_divexact(const std::vector<mpz_class>& num,
                                     const std::vector<mpz_class>& den) {
  std::vector<mpz_class> rem = num;
  std::vector<mpz_class> quot(num.size() - den.size() + 1, mpz_class(0));
  for (size_t i = num.size(); i-- >= den.size();) {
    mpz_class c = rem[i] / den.back();
    quot[i - (den.size() - 1)] = c;
    if (c != 0)
      for (size_t j = 0; j < den.size(); ++j) rem[i - (den.size() - 1) + j] -= c * den[j];
    if (i == den.size() - 1) break;
  }
  return quot;
}

}  // namespace

std::vector<mpz_class> cyclotomic_poly(unsigned long m) {
  static std::mutex mu;
  static std::unordered_map<unsigned long, std::vector<mpz_class>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed recursively
  // without re-entering the lock.
  std::vector<unsigned long> stack{m};
  while (!stack.empty()) {
    unsigned long k = stack.back();
    bool ready = true;
    for (unsigned long d = 1; d < k; ++d)
      if (k % d == 0 && !cache.count(d)) {
        stack.push_back(d);
        ready = false;
      }
    if (!ready) continue;
    stack.pop_back();
    if (cache.count(k)) continue;
    std::vector<mpz_class> poly(k + 1, mpz_class(0));
    poly[0] = -1;
    poly[k] = 1;
    for (unsigned long d = 1; d < k; ++d)
      if (k % d == 0) poly = poly_divexact(poly, cache.at(d));
    cache.emplace(k, std::move(poly));
  }
  return cache.at(m);
}

namespace {

// Reduce the term list onto the power basis of Q(zeta_M) with M the lcm of
// angle denominators; returns the remainder coefficients (size < phi(M)).
std::vector<mpq_class> reduced_coeffs(const std::map<mpq_class, mpq_class>& terms) {
  if (terms.empty()) return {};
  mpz_class M = 1;
  for (const auto& [a, c] : terms) mpz_lcm(M.get_mpz_t(), M.get_mpz_t(), a.get_den().get_mpz_t());
  unsigned long m = M.get_ui();
  std::vector<mpq_class> poly(m, mpq_class(0));
  for (const auto& [a, c] : terms) {
    mpz_class e = a.get_num() * (M / a.get_den());
    poly[e.get_ui() % m] += c;
  }
  auto phi = cyclotomic_poly(m);
  size_t deg = phi.size() - 1;  // = phi(m), phi is monic
  for (size_t i = poly.size(); i-- > deg;) {
    mpq_class c = poly[i];
    if (c == 0) continue;
    poly[i] = 0;
    for (size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * mpq_class(phi[j]);
  }
  poly.resize(deg);
  return poly;
}

}  // namespace

}  // namespace detail

bool CycloValue::is_zero() const {
  if (terms_.empty()) return true;
  for (const auto& c : detail::reduced_coeffs(terms_))
    if (c != 0) return false;
  return true;
}

bool CycloValue::equals(const CycloValue& o) const {
  CycloValue d = *this;
  CycloValue no = o;
  no.scale(-1);
  d += no;
  return d.is_zero();
}

std::optional<mpq_class> CycloValue::as_rational() const {
  if (terms_.empty()) return mpq_class(0);
  auto red = detail::reduced_coeffs(terms_);
  for (size_t i = 1; i < red.size(); ++i)
    if (red[i] != 0) return std::nullopt;
  return red.empty() ? mpq_class(0) : red[0];
}

Complex CycloValue::realize(mpfr_prec_t prec) const {
  Complex acc = Complex::zero(prec);
  for (const auto& [a, c] : terms_) {
    Complex r = RootOfUnity{a}.realize(prec);
    acc += r * Real::of_rational(c, prec);
  }
  return acc;
}

}  // namespace qlfun
