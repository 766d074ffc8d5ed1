#pragma once

#include "eiscong/reptheory.hpp"
#include "eiscong/zmatrix.hpp"

namespace eiscong {

/// The finite quotient Z[zeta_n]/(varpi^m) (or (p^m) in the unramified case)
/// with one integer action matrix per topological generator of
/// Z_p^x x (Z/N')^x, acting through multiplication by chi_p(a) chi'(b) a^k.
struct FiniteQuotientModule {
  long p = 2, m = 1;
  long ambient = 1;
  ZMat level_lattice;        // HNF of the ideal filtration step
  std::vector<ZMat> actions;  // multiplication matrices, one per generator
};

FiniteQuotientModule build_finite_quotient(long k, const DirichletCharacter& chi, long p, long m);

/// Invariant factors of the fixed-point subgroup of the finite quotient
/// (kernel of all action - identity maps), via integer linear algebra.
std::vector<Int> fixed_points_finite_level(long k, const DirichletCharacter& chi, long p, long m);

struct H1Result {
  std::vector<Int> invariant_factors;  // stabilized fixed points
  long stabilization_level = 0;
  bool stabilized = false;
  IdealHnf ideal{1};  // I with colimit = Z_p[chi]/I (only when identified)
  bool identified = false;
};

/// H^1_c as the stabilized fixed points of the finite quotients, identified
/// with Z_p[chi]/I. Stops when three consecutive levels agree.
H1Result h1_stabilized(long k, const DirichletCharacter& chi, long p, long m_max);

/// Size of coker(wild action - 1) on the level-m quotient; bounded in m iff
/// the rational cohomology vanishes.
Int wild_cokernel_size(long k, const DirichletCharacter& chi, long p, long m);

}  // namespace eiscong
