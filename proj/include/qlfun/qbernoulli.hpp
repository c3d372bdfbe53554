#pragma once

#include "qlfun/characters.hpp"
#include "qlfun/numerics.hpp"

namespace qlfun {

// Exact value a + b*L where L = (q-1)/log q for a fixed rational q.  The
// number recurrence is linear over Q in these, so the whole
// beta table lives in this two-dimensional space.
struct TowerElem {
  mpq_class a, b;

  TowerElem() : a(0), b(0) {}
  TowerElem(mpq_class a_, mpq_class b_) : a(std::move(a_)), b(std::move(b_)) {}

  TowerElem operator+(const TowerElem& o) const { return {a + o.a, b + o.b}; }
  TowerElem operator-(const TowerElem& o) const { return {a - o.a, b - o.b}; }
  TowerElem scaled(const mpq_class& s) const { return {a * s, b * s}; }
  bool operator==(const TowerElem& o) const { return a == o.a && b == o.b; }
  bool is_zero() const { return a == 0 && b == 0; }

  Real realize(const QParam& q, const PrecisionCtx& ctx) const {
    return ctx.rational(a) + ctx.rational(b) * q.l_factor();
  }
};

enum class BetaRoute { Recurrence, Explicit };
enum class PolyRoute { Binomial, Series };
enum class ChiRoute { Series, Closed };
// Exponent of the bracket prefactor in the order-r closed form: the
// degree-shifted exponent n-r is the one consistent with the series; the
// full-degree exponent n is kept only so the harness can exhibit its
// deviation factor.
enum class ClosedExponent { DegreeMinusOrder, FullDegree };

// beta_{n,q} as an exact tower element (rational q only).
TowerElem beta_q_exact(unsigned n, const mpq_class& q, BetaRoute route);

// Residual of the defining recurrence at index n:
// sum_k binom(n,k) q^k beta_k - beta_n - [n == 1]; exactly zero when the
// table is correct.
TowerElem beta_recurrence_residual(unsigned n, const mpq_class& q);

// Numeric beta_{n,q} for any QParam; exact path realized when available.
Certified beta_q(unsigned n, const QParam& q, BetaRoute route, const PrecisionCtx& ctx);

// beta_{n,q}(x), two routes: the finite binomial sum over beta_{i,q}, and
// coefficient extraction from the generating series (certified tail).
Certified beta_q_poly(unsigned n, const mpq_class& x, const QParam& q, PolyRoute route,
                      const PrecisionCtx& ctx);

// Order-r polynomial B^{(r)}_{n,q}(x); zero for n < r.  Series route is a
// single certified sum after composition counting; the binomial route
// expands over B^{(r)}_{k,q}(0) (exponent on q^x corrected to x(k-r+1),
// which the series forces; at r = 1 this is the usual q^{xk}).
Certified multi_b(unsigned n, unsigned r, const mpq_class& x, const QParam& q, PolyRoute route,
                  const PrecisionCtx& ctx);

// Character-twisted beta_{n,chi,q}.  The closed route is asserted only for
// nontrivial chi (its derivation cancels the L-term against sum chi = 0);
// principal characters come back flagged.
CertifiedC gen_beta_chi(unsigned n, const DirichletCharacter& chi, const QParam& q,
                        ChiRoute route, const PrecisionCtx& ctx);

// Order-r character-twisted numbers; zero for n < r.
CertifiedC multi_gen_beta_chi(unsigned n, unsigned r, const DirichletCharacter& chi,
                              const QParam& q, ChiRoute route, const PrecisionCtx& ctx,
                              ClosedExponent exponent = ClosedExponent::DegreeMinusOrder);

namespace detail {
// Memoized B^{(r)}_{k,q}(0) series values for k <= upto.
std::vector<Certified> multi_b_zero_table(unsigned r, const QParam& q, unsigned upto,
                                          const PrecisionCtx& ctx);
// Single memoized B^{(r)}_{k,q}(0); cheap repeated access for expansion loops.
Certified multi_b_zero(unsigned r, const QParam& q, unsigned k, const PrecisionCtx& ctx);
}  // namespace detail

}  // namespace qlfun
