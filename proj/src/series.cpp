#include "qlfun/series.hpp"

#include <stdexcept>

#include "qlfun/errors.hpp"

namespace qlfun {

RationalSeries RationalSeries::exp_linear(const mpq_class& a, std::size_t n) {
  RationalSeries s(n);
  mpq_class term = 1;
  s.c_[0] = term;
  for (std::size_t k = 1; k < n; ++k) {
    term *= a;
    term /= static_cast<long>(k);
    s.c_[k] = term;
  }
  return s;
}

RationalSeries RationalSeries::expm1(const mpq_class& a, std::size_t n) {
  RationalSeries s = exp_linear(a, n);
  s.c_[0] = 0;
  return s;
}

RationalSeries RationalSeries::add(const RationalSeries& o) const {
  RationalSeries s(std::min(size(), o.size()));
  for (std::size_t k = 0; k < s.size(); ++k) s.c_[k] = c_[k] + o.c_[k];
  return s;
}

RationalSeries RationalSeries::mul(const RationalSeries& o) const {
  RationalSeries s(std::min(size(), o.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < s.size(); ++j) {
      if (o.c_[j] == 0) continue;
      s.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return s;
}

RationalSeries RationalSeries::pow(unsigned r) const {
  RationalSeries acc(size());
  acc.c_[0] = 1;
  for (unsigned i = 0; i < r; ++i) acc = acc.mul(*this);
  return acc;
}

RationalSeries RationalSeries::inverse() const {
  if (c_[0] == 0) throw domain_error("RationalSeries::inverse: zero constant term");
  RationalSeries s(size());
  s.c_[0] = 1 / c_[0];
  for (std::size_t k = 1; k < size(); ++k) {
    mpq_class acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * s.c_[k - j];
    s.c_[k] = -acc / c_[0];
  }
  return s;
}

RationalSeries RationalSeries::shift_down(unsigned r) const {
  if (size() <= r) throw domain_error("RationalSeries::shift_down: order too small");
  for (unsigned k = 0; k < r; ++k)
    if (c_[k] != 0)
      throw std::logic_error("RationalSeries::shift_down: low-order coefficient is nonzero");
  RationalSeries s(size() - r);
  for (std::size_t k = 0; k < s.size(); ++k) s.c_[k] = c_[k + r];
  return s;
}

RationalSeries RationalSeries::exp() const {
  if (c_[0] != 0) throw domain_error("RationalSeries::exp: nonzero constant term");
  RationalSeries g(size());
  g.c_[0] = 1;
  // g' = h' g, solved coefficient by coefficient
  for (std::size_t k = 1; k < size(); ++k) {
    mpq_class acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += mpq_class(static_cast<long>(j)) * c_[j] * g.c_[k - j];
    g.c_[k] = acc / static_cast<long>(k);
  }
  return g;
}

void RationalSeries::scale(const mpq_class& s) {
  for (auto& c : c_) c *= s;
}

}  // namespace qlfun
