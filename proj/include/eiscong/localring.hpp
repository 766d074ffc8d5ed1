#pragma once

#include "eiscong/characters.hpp"
#include "eiscong/ideal.hpp"

#include <optional>

namespace eiscong {

/// Element of F_p[x]/(g) for a monic irreducible g; small residue fields.
struct ResidueFieldElt {
  std::vector<long> c;  // length deg g, entries mod p
};

/// Global model of Z_p[chi] at precision p^M: the ring Z[zeta_n] with ideals
/// understood to contain p^M. "Coherent" means Z[zeta_n] (x) Z_p is local
/// (Phi_n is a power of a single irreducible mod p); then there is a unique
/// prime above p, a uniformizer, and exact valuations with no choice of
/// embedding.
class LocalRing {
 public:
  LocalRing(long p, long ambient, long M);

  long p() const { return p_; }
  long ambient() const { return n_; }
  long precision() const { return M_; }
  const Int& p_to_M() const { return pM_; }
  bool coherent() const { return coherent_; }
  long ramification() const { return e_; }      // e = phi(p^s)
  long residue_degree() const { return f_; }    // f = ord_{n0}(p)
  long chain_length() const { return e_ * M_; }  // v(p^M)

  /// 1 - zeta_{p^s} when the wild part is nontrivial, else p.
  const CyclotomicNumber& uniformizer() const { return varpi_; }
  long wild_exponent() const { return s_; }

  /// Exact varpi-adic valuation (may be negative for non-integral input);
  /// pi_val_infinity for zero. Requires coherence.
  long valuation(const CyclotomicNumber& x) const;

  /// --- finite quotient Z[zeta_n]/(p^M): elements as coefficient vectors mod p^M ---
  using Elt = std::vector<Int>;

  Elt reduce(const CyclotomicNumber& x) const;  // requires p-coprime denominator
  Elt zero() const { return Elt(phi_, Int(0)); }
  Elt one() const;
  bool is_zero(const Elt& a) const;
  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  CyclotomicNumber lift(const Elt& a) const;

  /// Valuation of the class mod p^M, capped at chain_length().
  long valuation_mod(const Elt& a) const;
  bool is_unit_mod(const Elt& a) const { return valuation_mod(a) == 0; }
  /// Inverse of a unit, by Newton lifting from the residue ring.
  Elt inverse_mod(const Elt& a) const;
  /// Exact division by varpi^j (requires valuation >= j); defined mod varpi^{L-j}.
  Elt divide_varpi(const Elt& a, long j) const;

  /// Image in the residue field F_{p^f}.
  ResidueFieldElt to_residue(const Elt& a) const;
  bool residue_is_zero(const ResidueFieldElt& a) const;
  ResidueFieldElt residue_add(const ResidueFieldElt& a, const ResidueFieldElt& b) const;
  ResidueFieldElt residue_mul(const ResidueFieldElt& a, const ResidueFieldElt& b) const;
  ResidueFieldElt residue_neg(const ResidueFieldElt& a) const;
  ResidueFieldElt residue_inv(const ResidueFieldElt& a) const;
  ResidueFieldElt residue_zero() const { return {std::vector<long>(f_, 0)}; }

  /// The ideal (varpi^j) + (p^M) as an honest HNF ideal of Z[zeta_n].
  IdealHnf varpi_power_ideal(long j) const;

  /// Character value realized in this ring; requires image order compatible.
  Elt character_value(const DirichletCharacter& chi, long a) const;

 private:
  long p_, n_, M_, s_, phi_;
  long e_, f_;
  bool coherent_;
  Int pM_;
  CyclotomicNumber varpi_;
  std::vector<CyclotomicNumber> varpi_inv_pow_;  // varpi^{-j}, j = 0..chain length
  std::vector<long> res_poly_;           // monic irreducible factor of Phi_n mod p
  std::vector<std::vector<long>> xbar_;  // x^k mod (p, res_poly) for k < phi
};

/// Local model attached to a character's value field.
LocalRing local_ring_for(const DirichletCharacter& chi, long p, long M);

}  // namespace eiscong
