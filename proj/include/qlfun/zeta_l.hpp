#pragma once

#include <vector>

#include "qlfun/qbernoulli.hpp"

namespace qlfun {

enum class Route {
  Series,
  NegInt,
  Decomposition,
  Expansion,
  Recurrence,
  Explicit,
  Binomial,
  Closed,
};

enum class Mode { Exact, Certified, Heuristic };

const char* route_name(Route r);
const char* mode_name(Mode m);

struct EvalResult {
  Complex value;
  Real error_bound;   // certified for Series/NegInt/Decomposition, heuristic for Expansion
  Route route = Route::Series;
  long terms_used = 0;
  Mode mode = Mode::Certified;
  bool principal_flag = false;   // principal character: identity not asserted
  bool unasserted_flag = false;  // e.g. negative-integer route at n = 0
};

// Which order-r coefficient family the expansion route uses: Consistent
// rebases them to q^F (with the matching q^{A(1-r)} power), which is the
// form the series forces; Literal keeps base-q coefficients and no power
// correction, and exists only so the harness can record its deviation.
enum class ExpansionForm { Consistent, Literal };

// zeta_{r,q}(s, x) = sum_{M>=0} binom(M+r-1, r-1) q^{M+x} [M+x]_q^{-s},
// x > 0.  Converges for every s when 0 < q < 1.  The NegInt route evaluates
// the order-r polynomial closed form at s = -n.
EvalResult multi_qzeta(unsigned r, const Complex& s, const mpq_class& x, const QParam& q,
                       Route route, const PrecisionCtx& ctx);

// H_{r,q}(s; a_1..a_r | F): the congruence-restricted sum, equal to
// [F]_q^{-s} zeta_{r,q^F}(s, (sum a_i)/F).  Requires 1 <= a_i <= F.
EvalResult h_func(unsigned r, const Complex& s, const std::vector<unsigned long>& a,
                  unsigned long big_f, const QParam& q, Route route, const PrecisionCtx& ctx,
                  ExpansionForm form = ExpansionForm::Consistent);

// Multiple Dirichlet q-L-function over chi.
EvalResult l_func(unsigned r, const Complex& s, const DirichletCharacter& chi, const QParam& q,
                  Route route, const PrecisionCtx& ctx,
                  ExpansionForm form = ExpansionForm::Consistent);

namespace detail {
// H with the tuple collapsed to its total A = sum a_i (the value depends on
// the a_i only through A).
EvalResult h_by_total(unsigned r, const Complex& s, unsigned long total_a, unsigned long big_f,
                      const QParam& q, Route route, const PrecisionCtx& ctx, ExpansionForm form);
}  // namespace detail

}  // namespace qlfun
