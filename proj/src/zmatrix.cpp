#include "eiscong/zmatrix.hpp"

#include <algorithm>

namespace eiscong {

namespace {

long pivot_col(const std::vector<Int>& row) {
  for (size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return static_cast<long>(j);
  return -1;
}

// Euclidean row combination: make a the gcd-bearing row at column c, zero b there.
void gcd_rows(std::vector<Int>& a, std::vector<Int>& b, long c) {
  while (b[c] != 0) {
    Int q = a[c] / b[c];
    for (size_t j = 0; j < a.size(); ++j) a[j] -= q * b[j];
    std::swap(a, b);
  }
}

}  // namespace

bool hnf_insert(ZMat& hnf, std::vector<Int> v) {
  bool grew = false;
  while (true) {
    long c = pivot_col(v);
    if (c < 0) return grew;
    // find existing row with this pivot
    size_t i = 0;
    for (; i < hnf.size(); ++i) {
      long pc = pivot_col(hnf[i]);
      if (pc == c) break;
      if (pc > c) {
        i = hnf.size();
        break;
      }
    }
    if (i == hnf.size()) {
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      auto pos = std::find_if(hnf.begin(), hnf.end(),
                              [c](const std::vector<Int>& r) { return pivot_col(r) > c; });
      hnf.insert(pos, std::move(v));
      return true;
    }
    Int old_p = hnf[i][c];
    gcd_rows(hnf[i], v, c);
    if (hnf[i][c] < 0)
      for (auto& x : hnf[i]) x = -x;
    if (hnf[i][c] != old_p) grew = true;
    // v now has pivot in a later column (or is zero); continue inserting it.
  }
}

void hnf_reduce_above(ZMat& hnf) {
  for (size_t i = 0; i < hnf.size(); ++i) {
    long c = pivot_col(hnf[i]);
    for (size_t k = 0; k < i; ++k) {
      Int q = hnf[k][c] / hnf[i][c];
      if (hnf[k][c] - q * hnf[i][c] < 0) q -= 1;  // floor division
      if (q == 0) continue;
      for (size_t j = 0; j < hnf[k].size(); ++j) hnf[k][j] -= q * hnf[i][j];
    }
  }
}

ZMat hnf_rows(const ZMat& rows, long ncols) {
  ZMat h;
  for (const auto& r : rows) {
    auto v = r;
    v.resize(ncols, Int(0));
    hnf_insert(h, std::move(v));
  }
  hnf_reduce_above(h);
  return h;
}

std::optional<std::vector<Int>> lattice_solve(const ZMat& hnf, const std::vector<Int>& v) {
  std::vector<Int> rem = v;
  std::vector<Int> coords(hnf.size(), Int(0));
  for (size_t i = 0; i < hnf.size(); ++i) {
    long c = pivot_col(hnf[i]);
    if (rem[c] == 0) continue;
    if (rem[c] % hnf[i][c] != 0) return std::nullopt;
    Int q = rem[c] / hnf[i][c];
    coords[i] = q;
    for (size_t j = 0; j < rem.size(); ++j) rem[j] -= q * hnf[i][j];
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return coords;
}

bool lattice_contains(const ZMat& hnf, const std::vector<Int>& v) {
  return lattice_solve(hnf, v).has_value();
}

Int hnf_determinant(const ZMat& hnf, long ncols) {
  if (static_cast<long>(hnf.size()) < ncols) return 0;
  Int d = 1;
  for (const auto& r : hnf) d *= r[pivot_col(r)];
  return d;
}

ZMat left_kernel(const ZMat& m, long ncols) {
  // Augment [M | I], row-reduce the M part to echelon; rows with zero M part
  // give the kernel.
  size_t nr = m.size();
  ZMat aug(nr);
  for (size_t i = 0; i < nr; ++i) {
    aug[i] = m[i];
    aug[i].resize(ncols, Int(0));
    aug[i].resize(ncols + nr, Int(0));
    aug[i][ncols + i] = 1;
  }
  // Gauss–Euclid on the first ncols columns.
  size_t row = 0;
  for (long c = 0; c < ncols && row < nr; ++c) {
    // gcd all rows below into one pivot row
    size_t piv = nr;
    for (size_t i = row; i < nr; ++i)
      if (aug[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == nr) continue;
    std::swap(aug[row], aug[piv]);
    for (size_t i = row + 1; i < nr; ++i) {
      while (aug[i][c] != 0) {
        Int q = aug[row][c] / aug[i][c];
        for (size_t j = 0; j < aug[row].size(); ++j) aug[row][j] -= q * aug[i][j];
        std::swap(aug[row], aug[i]);
      }
    }
    ++row;
  }
  ZMat ker;
  for (size_t i = row; i < nr; ++i) {
    bool zero = true;
    for (long j = 0; j < ncols; ++j)
      if (aug[i][j] != 0) {
        zero = false;
        break;
      }
    if (!zero) continue;
    ker.emplace_back(aug[i].begin() + ncols, aug[i].end());
  }
  return ker;
}

ZMat preimage_lattice(const ZMat& a, const ZMat& w_hnf, long r) {
  // {x : x*A = y*W for some y}: left kernel of the stacked matrix [A; -W],
  // projected to the x block.
  ZMat stacked;
  for (long i = 0; i < r; ++i) stacked.push_back(a[i]);
  for (const auto& wrow : w_hnf) {
    auto neg = wrow;
    for (auto& x : neg) x = -x;
    stacked.push_back(std::move(neg));
  }
  long ncols = r;
  ZMat ker = left_kernel(stacked, ncols);
  ZMat xs;
  for (const auto& k : ker) xs.emplace_back(k.begin(), k.begin() + r);
  return hnf_rows(xs, r);
}

ZMat lattice_intersect(const ZMat& x_hnf, const ZMat& y_hnf, long r) {
  // a*X = b*Y: left kernel of [X; -Y]; intersection = (a parts) * X.
  ZMat stacked = x_hnf;
  for (const auto& yrow : y_hnf) {
    auto neg = yrow;
    for (auto& v : neg) v = -v;
    stacked.push_back(std::move(neg));
  }
  ZMat ker = left_kernel(stacked, r);
  ZMat rows;
  for (const auto& k : ker) {
    std::vector<Int> v(r, Int(0));
    for (size_t i = 0; i < x_hnf.size(); ++i)
      for (long j = 0; j < r; ++j) v[j] += k[i] * x_hnf[i][j];
    rows.push_back(std::move(v));
  }
  return hnf_rows(rows, r);
}

std::vector<Int> quotient_invariant_factors(const ZMat& m, long r) {
  // Smith normal form, small sizes.
  ZMat a = m;
  for (auto& row : a) row.resize(r, Int(0));
  size_t nr = a.size();
  std::vector<Int> factors;
  size_t top = 0;
  long left = 0;
  while (top < nr && left < r) {
    // find nonzero pivot
    size_t pi = nr;
    long pj = -1;
    for (size_t i = top; i < nr && pi == nr; ++i)
      for (long j = left; j < r; ++j)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == nr) break;
    std::swap(a[top], a[pi]);
    for (size_t i = 0; i < nr; ++i) std::swap(a[i][left], a[i][pj]);
    bool again = true;
    while (again) {
      again = false;
      for (size_t i = top + 1; i < nr; ++i) {
        while (a[i][left] != 0) {
          Int q = a[top][left] / a[i][left];
          for (long j = left; j < r; ++j) a[top][j] -= q * a[i][j];
          std::swap(a[top], a[i]);
        }
      }
      for (long j = left + 1; j < r; ++j) {
        while (a[top][j] != 0) {
          Int q = a[top][left] / a[top][j];
          if (q != 0)
            for (size_t i = top; i < nr; ++i) a[i][left] -= q * a[i][j];
          for (size_t i = top; i < nr; ++i) std::swap(a[i][left], a[i][j]);
          // column ops may have reintroduced entries below; redo rows
          again = true;
        }
      }
    }
    Int d = a[top][left];
    if (d < 0) d = -d;
    factors.push_back(d);
    ++top;
    ++left;
  }
  // enforce divisibility chain
  for (size_t i = 0; i + 1 < factors.size(); ++i) {
    for (size_t j = i + 1; j < factors.size(); ++j) {
      if (factors[j] % factors[i] != 0) {
        Int g = gcd(factors[i], factors[j]);
        Int l = factors[i] / g * factors[j];
        factors[i] = g;
        factors[j] = l;
      }
    }
  }
  std::sort(factors.begin(), factors.end());
  std::vector<Int> out;
  long rank = static_cast<long>(factors.size());
  for (auto& f : factors)
    if (f != 1) out.push_back(f);
  if (rank < r) out.push_back(Int(0));  // infinite factor marker
  return out;
}

std::vector<Int> sublattice_invariant_factors(const ZMat& x_hnf, const ZMat& w_hnf) {
  ZMat coords;
  for (const auto& w : w_hnf) {
    auto c = lattice_solve(x_hnf, w);
    if (!c) throw std::invalid_argument("sublattice_invariant_factors: W not inside X");
    coords.push_back(*c);
  }
  return quotient_invariant_factors(coords, static_cast<long>(x_hnf.size()));
}

}  // namespace eiscong
