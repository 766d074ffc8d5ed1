#pragma once

#include "eiscong/cyclotomic.hpp"

#include <string>
#include <vector>

namespace eiscong {

/// Structure of (Z/N)^x from CRT over prime-power factors: deterministic
/// generators (smallest residues, factors ordered by prime).
struct UnitGroupStructure {
  long modulus = 1;
  std::vector<std::pair<long, long>> generators;  // (residue, order)
  bool is_cyclic = true;
};

const UnitGroupStructure& unit_group_generators(long modulus);

/// Finite-order character of (Z/N)^x, stored by exponents against the
/// canonical unit-group generators: chi(g_i) = zeta_n^{exps[i]} with n the
/// exact image order. Extended by zero on non-units. Equality is pointwise.
class DirichletCharacter {
 public:
  static DirichletCharacter trivial(long modulus);
  /// chi(g_i) = zeta_order^{exps[i]}; the image order is normalized to be exact.
  static DirichletCharacter from_exponents(long modulus, long order, std::vector<long> exps);

  long modulus() const { return modulus_; }
  long image_order() const { return order_; }
  const std::vector<long>& generator_exponents() const { return exps_; }
  /// Canonical conductor of the cyclotomic field generated by the values.
  long value_ambient() const { return canonical_conductor(order_); }

  bool is_trivial() const { return order_ == 1; }
  long conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == modulus_; }
  bool is_even() const;

  /// Value as an exponent of zeta_{image order}; nullopt when gcd(a, N) > 1.
  std::optional<long> value_exponent(long a) const;
  CyclotomicNumber value(long a) const;
  /// Value in a chosen ambient ring (image order must divide its root group).
  CyclotomicNumber value_in(long ambient, long a) const;

  DirichletCharacter inverse() const;
  DirichletCharacter times(const DirichletCharacter& other) const;
  DirichletCharacter power(long e) const;
  /// Same values viewed modulo m; requires conductor | m.
  DirichletCharacter change_modulus(long m) const;
  DirichletCharacter primitive_part() const { return change_modulus(conductor_); }

  /// Pointwise equality of values (representation-independent).
  bool same_values(const DirichletCharacter& other) const;

  std::string serialize() const;  // "N:n:[e1,...,ek]"
  static DirichletCharacter parse(const std::string& text);

 private:
  DirichletCharacter() = default;
  void build_table();
  long compute_conductor() const;

  long modulus_ = 1;
  long order_ = 1;
  std::vector<long> exps_;
  long conductor_ = 1;
  std::vector<long> table_;  // residue -> exponent mod order, or -1 on non-units
};

std::vector<DirichletCharacter> all_characters(long modulus);
std::vector<DirichletCharacter> primitive_characters(long modulus);
std::vector<DirichletCharacter> primitive_characters_of_order(long modulus, long order);

/// chi = chi_p * chi' with conductors p^v and N'; requires chi primitive.
std::pair<DirichletCharacter, DirichletCharacter> factor_p_part(const DirichletCharacter& chi,
                                                                long p);

/// The (p-1)-st root of unity in Z/p^M congruent to a mod p, by iterating
/// a -> a^p to stabilization. For p = 2 this is +-1 per the (Z/4)^x convention.
Int teichmuller(long p, const Int& a, long M);

/// Number of irreducible factors of Phi_n over Q_p: phi(n') / ord_{n'}(p)
/// for n = p^s n' with p coprime to n'.
long p_adic_factor_count(long n, long p);

}  // namespace eiscong
