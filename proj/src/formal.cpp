#include "eiscong/formal.hpp"

namespace eiscong {

TruncatedSeries mult_by_a_series(const Int& a, long D, long p, long M) {
  if (D < 1 || M < 1) throw std::invalid_argument("mult_by_a_series: D, M >= 1");
  TruncatedSeries s{p, M, D, std::vector<Int>(D, Int(0))};
  Int pM = int_pow(Int(p), M);
  // C(a, j) = a (a-1) ... (a-j+1) / j!, exact then reduced
  Int num = 1;
  Int fact = 1;
  for (long j = 1; j <= D; ++j) {
    num *= (a - (j - 1));
    fact *= j;
    Int c = (num / fact) % pM;
    if (c < 0) c += pM;
    s.coeffs[j - 1] = c;
  }
  return s;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.p != g.p || f.M != g.M) throw std::invalid_argument("compose: mismatched parameters");
  long D = std::min(f.D, g.D);
  Int pM = int_pow(Int(f.p), f.M);
  // g^j truncated, accumulated
  std::vector<Int> acc(D, Int(0));
  std::vector<Int> gpow(D, Int(0));  // g^1
  for (long i = 0; i < D; ++i) gpow[i] = g.coeffs[i] % pM;
  for (long j = 1; j <= D; ++j) {
    if (j > 1) {
      std::vector<Int> next(D, Int(0));
      for (long i = 0; i < D; ++i) {
        if (gpow[i] == 0) continue;
        for (long l = 0; l < D && i + l + 1 < D; ++l) {
          if (g.coeffs[l] == 0) continue;
          next[i + l + 1] = (next[i + l + 1] + gpow[i] * g.coeffs[l]) % pM;
        }
      }
      gpow = std::move(next);
    }
    if (f.coeffs[j - 1] == 0) continue;
    for (long i = 0; i < D; ++i)
      acc[i] = (acc[i] + f.coeffs[j - 1] * gpow[i]) % pM;
  }
  return TruncatedSeries{f.p, f.M, D, std::move(acc)};
}

Int torsion_order(const IdealHnf& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("torsion_order: zero ideal has infinite torsion");
  return ideal.norm();
}

}  // namespace eiscong
