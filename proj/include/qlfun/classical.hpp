#pragma once

#include "qlfun/characters.hpp"
#include "qlfun/cyclotomic.hpp"
#include "qlfun/rational.hpp"

namespace qlfun {

// Ordinary Bernoulli number B_n in the B_1 = -1/2 convention, exact.
mpq_class bernoulli(unsigned n);

// B_n(x) = sum_k binom(n,k) B_k x^{n-k}, exact.
mpq_class bernoulli_poly(unsigned n, const mpq_class& x);

// Order-r generalized Bernoulli number attached to chi: the t^n/n!
// coefficient of  sum_{a_1..a_r=1..f} chi(sum a_i) t^r e^{(sum a_i) t} /
// (e^{f t} - 1)^r, computed by exact series arithmetic.  Exact cyclotomic
// output; rational for real characters.
CycloValue multi_gen_bernoulli(unsigned n, unsigned r, const DirichletCharacter& chi);

// Composition counts: c[A] = #{(a_1..a_r) in [1,f]^r : sum = A} for
// A = r .. r*f (index 0 of the result corresponds to A = r).
std::vector<mpz_class> composition_counts(unsigned r, unsigned long f);

}  // namespace qlfun
