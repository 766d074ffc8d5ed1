#pragma once

#include "eiscong/cyclotomic.hpp"
#include "eiscong/zmatrix.hpp"

#include <string>

namespace eiscong {

enum class IdealOrder { equal, first_inside_second, second_inside_first, incomparable };

/// Integral ideal of Z[zeta_n] as a full-rank integer lattice in row HNF over
/// the power basis. The zero ideal is the empty lattice (norm 0).
class IdealHnf {
 public:
  explicit IdealHnf(long ambient) : n_(ambient) {}  // zero ideal

  static IdealHnf zero(long ambient) { return IdealHnf(ambient); }
  static IdealHnf unit(long ambient);
  static IdealHnf from_generators(long ambient, const std::vector<CyclotomicNumber>& gens);
  static IdealHnf principal(const CyclotomicNumber& g);

  long ambient() const { return n_; }
  const ZMat& rows() const { return rows_; }
  bool is_zero() const { return rows_.empty(); }
  bool is_unit() const;
  Int norm() const;

  bool contains(const CyclotomicNumber& x) const;
  bool contains(const IdealHnf& other) const;

  IdealHnf times(const IdealHnf& other) const;
  IdealHnf plus(const IdealHnf& other) const;
  IdealHnf power(long e) const;

  bool operator==(const IdealHnf& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool operator!=(const IdealHnf& o) const { return !(*this == o); }

  std::string to_text() const;

 private:
  void absorb(const CyclotomicNumber& g);
  long n_;
  ZMat rows_;
};

IdealOrder ideal_compare(const IdealHnf& a, const IdealHnf& b);

/// Largest e with x in (1 - zeta_{p^m})^e, or `pi_val_infinity` for x = 0.
/// The ambient ring of x must contain zeta_{p^m}. Valuations extend to
/// non-integral x by v(a/b) = v(a) - v(b).
inline constexpr long pi_val_infinity = 1L << 30;
long pi_valuation(const CyclotomicNumber& x, long p, long m);

}  // namespace eiscong
