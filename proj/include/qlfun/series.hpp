#pragma once

#include <vector>

#include "qlfun/rational.hpp"

namespace qlfun {

// Dense truncated power series with exact rational coefficients.  All
// operations stay at the constructed order; division is by series with a
// nonzero constant term (factor t-powers out first via shift_down).
class RationalSeries {
 public:
  explicit RationalSeries(std::size_t n_coeffs) : c_(n_coeffs, mpq_class(0)) {}

  static RationalSeries exp_linear(const mpq_class& a, std::size_t n);  // e^{a t}
  static RationalSeries expm1(const mpq_class& a, std::size_t n);       // e^{a t} - 1

  std::size_t size() const { return c_.size(); }
  const mpq_class& operator[](std::size_t k) const { return c_[k]; }
  mpq_class& coeff(std::size_t k) { return c_[k]; }

  RationalSeries add(const RationalSeries& o) const;
  RationalSeries mul(const RationalSeries& o) const;
  RationalSeries pow(unsigned r) const;
  RationalSeries inverse() const;                // requires c_[0] != 0
  RationalSeries shift_down(unsigned r) const;   // /t^r, throws if low coeffs nonzero
  RationalSeries exp() const;                    // requires c_[0] == 0
  void scale(const mpq_class& s);

 private:
  std::vector<mpq_class> c_;
};

}  // namespace qlfun
