#pragma once

#include "eiscong/characters.hpp"

namespace eiscong {

/// Classical Bernoulli number, convention B_1 = -1/2. Cached.
Rat bernoulli_rational(long k);

/// Bernoulli polynomial B_k evaluated at a rational point.
Rat bernoulli_poly_at(long k, const Rat& x);

struct GeneralizedBernoulli {
  long k = 0;
  DirichletCharacter chi;
  CyclotomicNumber value;  // in Q(zeta_n), n the image order's canonical ring
};

/// B_{k,chi} = f^{k-1} sum_{a=1..f} chi(a) B_k(a/f) for chi primitive of
/// conductor f. Reduces to the classical B_k at the trivial character.
GeneralizedBernoulli generalized_bernoulli(long k, const DirichletCharacter& chi);

/// Valuation of B_{k,chi}/2k: the varpi-valuation in the (coherent) local
/// model of Z_p[chi] when it is ramified, the plain p-valuation otherwise.
/// Requires the parity (-1)^k = chi(-1); negative values report denominators.
long bkchi_over_2k_valuation(long k, const DirichletCharacter& chi, long p);

}  // namespace eiscong
