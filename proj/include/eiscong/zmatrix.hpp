#pragma once

#include "eiscong/arith.hpp"

#include <optional>

namespace eiscong {

/// Integer matrices as vectors of rows; lattices are row spans.
using ZMat = std::vector<std::vector<Int>>;

/// Row Hermite normal form: echelon rows with positive pivots, entries above
/// each pivot reduced into [0, pivot). Zero rows dropped. Canonical per lattice.
ZMat hnf_rows(const ZMat& rows, long ncols);

/// Insert one row into an HNF basis, restoring HNF. Returns true if the
/// lattice grew.
bool hnf_insert(ZMat& hnf, std::vector<Int> v);

/// Reduce entries above pivots; call after a batch of hnf_insert.
void hnf_reduce_above(ZMat& hnf);

/// Coordinates of v in the row span, if it lies there.
std::optional<std::vector<Int>> lattice_solve(const ZMat& hnf, const std::vector<Int>& v);

bool lattice_contains(const ZMat& hnf, const std::vector<Int>& v);

/// Determinant of a full-rank HNF (product of pivots); 0 if rank-deficient.
Int hnf_determinant(const ZMat& hnf, long ncols);

/// Basis of the left kernel {x : x * M = 0}.
ZMat left_kernel(const ZMat& m, long ncols);

/// {x in Z^r : x * A lies in the lattice spanned by W} as an HNF basis.
ZMat preimage_lattice(const ZMat& a, const ZMat& w_hnf, long r);

/// Intersection of two lattices in Z^r, as HNF.
ZMat lattice_intersect(const ZMat& x_hnf, const ZMat& y_hnf, long r);

/// Invariant factors d1 | d2 | ... of the abelian group Z^r / rowspan(M)
/// (all finite iff M has full column rank r). Trivial factors 1 dropped;
/// returns {} for the trivial group.
std::vector<Int> quotient_invariant_factors(const ZMat& m, long r);

/// Invariant factors of X / W given HNF bases with W a finite-index
/// sublattice of X.
std::vector<Int> sublattice_invariant_factors(const ZMat& x_hnf, const ZMat& w_hnf);

}  // namespace eiscong
