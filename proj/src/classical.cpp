#include "qlfun/classical.hpp"

#include <mutex>

#include "qlfun/errors.hpp"
#include "qlfun/series.hpp"

namespace qlfun {

mpq_class bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<mpq_class> table;  // B_0..B_{table.size()-1}
  std::lock_guard<std::mutex> lock(mu);
  if (n >= table.size()) {
    std::size_t upto = std::max<std::size_t>(n + 1, table.size() * 2 + 8);
    // t/(e^t - 1): invert (e^t - 1)/t, whose coefficients are 1/(k+1)!
    RationalSeries u(upto);
    mpq_class c = 1;
    for (std::size_t k = 0; k < upto; ++k) {
      u.coeff(k) = c;
      c /= static_cast<long>(k + 2);
    }
    RationalSeries inv = u.inverse();
    table.clear();
    table.reserve(upto);
    mpq_class kfac = 1;
    for (std::size_t k = 0; k < upto; ++k) {
      if (k > 0) kfac *= static_cast<long>(k);
      table.push_back(inv[k] * kfac);
    }
  }
  return table[n];
}

mpq_class bernoulli_poly(unsigned n, const mpq_class& x) {
  // sum from k = n down to 0 so x^{n-k} grows by one factor per step
  mpq_class acc = 0;
  mpq_class xpow = 1;
  for (unsigned k = n + 1; k-- > 0;) {
    acc += mpq_class(binom_z(n, k)) * bernoulli(k) * xpow;
    if (k > 0) xpow *= x;
  }
  return acc;
}

std::vector<mpz_class> composition_counts(unsigned r, unsigned long f) {
  // iterated convolution of the indicator of [1, f]
  std::vector<mpz_class> acc{mpz_class(1)};  // counts for total 0 with 0 parts
  unsigned long offset = 0;                  // acc[i] = count for total i + offset
  for (unsigned step = 0; step < r; ++step) {
    std::vector<mpz_class> next(acc.size() + f - 1, mpz_class(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == 0) continue;
      for (unsigned long a = 1; a <= f; ++a) next[i + a - 1] += acc[i];
    }
    acc = std::move(next);
    offset += 1;
  }
  return acc;  // index 0 -> total r
}

CycloValue multi_gen_bernoulli(unsigned n, unsigned r, const DirichletCharacter& chi) {
  if (r == 0) throw domain_error("multi_gen_bernoulli: r must be >= 1");
  unsigned long f = chi.modulus();
  std::size_t order = n + r + 2;
  if (order > 4096) throw domain_error("multi_gen_bernoulli: series order overflow");

  // (e^{ft}-1)^r = t^r * unit; the vanishing of the r low-order
  // coefficients is asserted inside shift_down.
  RationalSeries w = RationalSeries::expm1(mpq_class(static_cast<long>(f)), order + r).pow(r);
  RationalSeries unit_inv = w.shift_down(r).inverse();

  auto counts = composition_counts(r, f);
  CycloValue result = CycloValue::zero();
  mpq_class nfac(fact_z(n));
  for (std::size_t i = 0; i < counts.size(); ++i) {
    unsigned long total = r + i;
    CharValue cv = chi.eval(static_cast<long long>(total));
    if (cv.zero) continue;
    RationalSeries p = RationalSeries::exp_linear(mpq_class(static_cast<long>(total)), order)
                           .mul(unit_inv);
    mpq_class coeff = p[n] * nfac * mpq_class(counts[i]);
    result.add_scaled(cv.root, coeff);
  }
  return result;
}

}  // namespace qlfun
