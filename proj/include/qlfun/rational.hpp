#pragma once

#include <gmpxx.h>

#include <string>

#include "qlfun/errors.hpp"

namespace qlfun {

inline mpq_class make_q(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline mpq_class mpq_pow_ui(const mpq_class& q, unsigned long e) {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den().get_mpz_t(), e);
  r.canonicalize();
  return r;
}

inline mpz_class binom_z(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline mpz_class fact_z(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Falling factorial n!/(n-r)! = n (n-1) ... (n-r+1).
inline mpz_class falling_z(unsigned long n, unsigned long r) {
  mpz_class acc = 1;
  for (unsigned long i = 0; i < r; ++i) acc *= mpz_class(n - i);
  return acc;
}

inline bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

inline std::string q_to_string(const mpq_class& q) { return q.get_str(); }

// Accepts "p/q", an integer, or a plain decimal like "0.999" (snapped to
// the exact rational with a power-of-ten denominator so exact routes stay
// available downstream).
inline mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw domain_error("empty rational literal");
  auto dot = s.find('.');
  try {
    if (dot == std::string::npos) {
      mpq_class q(s);
      q.canonicalize();
      return q;
    }
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.find_first_not_of("0123456789") != std::string::npos)
      throw domain_error("bad decimal literal: " + s);
    bool neg = !head.empty() && head[0] == '-';
    if (neg) head = head.substr(1);
    if (head.empty()) head = "0";
    mpz_class ip(head), fp(frac.empty() ? std::string("0") : frac);
    mpz_class den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    mpq_class q(ip * den + fp, den);
    q.canonicalize();
    if (neg) q = -q;
    return q;
  } catch (const std::invalid_argument&) {
    throw domain_error("bad rational literal: " + s);
  }
}

}  // namespace qlfun
