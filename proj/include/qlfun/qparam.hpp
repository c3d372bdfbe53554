#pragma once

#include "qlfun/precision.hpp"
#include "qlfun/rational.hpp"
#include "qlfun/real.hpp"

namespace qlfun {

// Deformation parameter q, strictly inside (0,1), with the derived constants
// every evaluator keeps reaching for: log q, 1/(1-q), and the factor
// L = (q-1)/log q.  Exact rational q keeps the exact (tower) routes
// available; a plain high-precision q degrades everything to numeric.
class QParam {
 public:
  QParam(const mpq_class& q, const PrecisionCtx& ctx)
      : exact_(true), q_(q), qr_(ctx.rational(q)) {
    if (!(q > 0 && q < 1)) throw domain_error("q must lie strictly inside (0,1)");
    init_cached();
  }

  QParam(const Real& q, const PrecisionCtx& ctx) : exact_(false), qr_(q) {
    (void)ctx;
    if (!(q > Real::of_long(0, q.prec()) && q < Real::of_long(1, q.prec())))
      throw domain_error("q must lie strictly inside (0,1)");
    init_cached();
  }

  bool exact() const { return exact_; }
  const mpq_class& rational() const {
    if (!exact_) throw usage_error("QParam: exact rational q required");
    return q_;
  }
  mpq_class one_minus_q_exact() const { return 1 - rational(); }

  const Real& value() const { return qr_; }
  const Real& log_q() const { return log_q_; }                // < 0
  const Real& one_minus_q_inv() const { return inv1mq_; }     // 1/(1-q)
  const Real& l_factor() const { return lf_; }                // (q-1)/log q, in (0,1)

  QParam pow(unsigned long k, const PrecisionCtx& ctx) const {
    if (k == 0) throw domain_error("QParam::pow: exponent must be >= 1");
    if (k == 1) return *this;
    if (exact_) return QParam(mpq_pow_ui(q_, k), ctx);
    return QParam(pow_si(qr_, static_cast<long>(k)), ctx);
  }

 private:
  void init_cached() {
    log_q_ = log(qr_);
    inv1mq_ = Real::of_long(1, qr_.prec()) / (Real::of_long(1, qr_.prec()) - qr_);
    lf_ = (qr_ - 1) / log_q_;
    Real zero(qr_.prec()), one = Real::of_long(1, qr_.prec());
    if (!(lf_ > zero && lf_ < one))
      throw std::logic_error("QParam: l_factor left (0,1); arithmetic is broken");
  }

  bool exact_ = false;
  mpq_class q_;
  Real qr_, log_q_, inv1mq_, lf_;
};

}  // namespace qlfun
