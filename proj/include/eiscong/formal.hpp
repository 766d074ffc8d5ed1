#pragma once

#include "eiscong/ideal.hpp"

namespace eiscong {

/// Endomorphism series of the multiplicative formal group, truncated at
/// degree D with coefficients mod p^M. No constant term.
struct TruncatedSeries {
  long p = 2, M = 1, D = 1;
  std::vector<Int> coeffs;  // t^1 .. t^D

  bool operator==(const TruncatedSeries& o) const {
    return p == o.p && M == o.M && D == o.D && coeffs == o.coeffs;
  }
};

/// [a](t) = (1+t)^a - 1: coefficients are binomial coefficients C(a, j)
/// reduced mod p^M.
TruncatedSeries mult_by_a_series(const Int& a, long D, long p, long M);

/// Composition f(g(t)) truncated at the common degree cap.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Order of the I-torsion of Gm (x) A for A = Z[zeta_n]: the lattice index
/// |A / I|. The unit ideal gives 1; the zero ideal (infinite torsion) is
/// rejected.
Int torsion_order(const IdealHnf& ideal);

}  // namespace eiscong
