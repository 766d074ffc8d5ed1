#pragma once

#include "eiscong/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eiscong {

/// Coefficients of the n-th cyclotomic polynomial, ascending degree. Cached.
const std::vector<Int>& cyclotomic_polynomial(long n);

/// Canonical presentation of Q(zeta_n): n = 2 mod 4 collapses to n/2, 2 to 1.
long canonical_conductor(long n);

/// Order of the root-of-unity group of Z[zeta_n]: 2n for odd n, n otherwise.
long root_group_order(long n);

/// An exact element of Q(zeta_n), stored as an integer vector in the power
/// basis {1, z, ..., z^{phi(n)-1}} modulo Phi_n over a positive common
/// denominator. gcd(content, den) = 1 after normalization.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : n_(1), num_{Int(0)}, den_(1) {}
  explicit CyclotomicNumber(long ambient);
  CyclotomicNumber(long ambient, const Rat& value);
  CyclotomicNumber(long ambient, std::vector<Int> numerator, Int denominator);

  static CyclotomicNumber from_int(long ambient, const Int& v);
  /// Canonical primitive `order`-th root of unity, raised to `exp`, inside
  /// Q(zeta_ambient). Requires order | root_group_order(ambient).
  static CyclotomicNumber zeta_pow(long ambient, long order, long exp);

  long ambient() const { return n_; }
  long degree() const { return static_cast<long>(num_.size()); }
  const std::vector<Int>& numerator() const { return num_; }
  const Int& denominator() const { return den_; }

  bool is_zero() const;
  bool is_integral() const { return den_ == 1; }
  bool is_rational() const;
  std::optional<Rat> as_rational() const;

  CyclotomicNumber operator+(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-() const;
  CyclotomicNumber operator*(const CyclotomicNumber& o) const;
  CyclotomicNumber operator/(const CyclotomicNumber& o) const;
  CyclotomicNumber inverse() const;
  bool operator==(const CyclotomicNumber& o) const;
  bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

  CyclotomicNumber scale(const Rat& r) const;
  CyclotomicNumber pow(long e) const;

  /// Field norm N_{Q(zeta_n)/Q}.
  Rat norm() const;
  /// Norm of the integral numerator vector.
  Int numerator_norm() const;

  /// Re-express in Q(zeta_m); requires the value to lie there
  /// (root_group_order(n) | root_group_order(m), or the value rational).
  CyclotomicNumber promote(long m) const;

  std::string to_string() const;

 private:
  void normalize();
  long n_;
  std::vector<Int> num_;
  Int den_;
};

enum class ArithOp { add, sub, mul, div };
CyclotomicNumber cyc_arith(const CyclotomicNumber& a, const CyclotomicNumber& b, ArithOp op);

}  // namespace eiscong
