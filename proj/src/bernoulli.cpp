#include "eiscong/bernoulli.hpp"

#include "eiscong/localring.hpp"

#include <mutex>
#include <vector>

namespace eiscong {

namespace {
std::vector<Rat> g_bern_cache{Rat(1)};
std::mutex g_bern_mutex;
}  // namespace

Rat bernoulli_rational(long k) {
  if (k < 0) throw std::invalid_argument("bernoulli_rational: k >= 0");
  std::lock_guard<std::mutex> lock(g_bern_mutex);
  while (static_cast<long>(g_bern_cache.size()) <= k) {
    long m = static_cast<long>(g_bern_cache.size());
    // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m
    Rat s = 0;
    for (long j = 0; j < m; ++j) s += Rat(binomial_int(m + 1, j)) * g_bern_cache[j];
    g_bern_cache.push_back(-s / Rat(m + 1));
  }
  return g_bern_cache[k];
}

Rat bernoulli_poly_at(long k, const Rat& x) {
  Rat s = 0;
  Rat xp = 1;
  // B_k(x) = sum_j C(k, j) B_{k-j} x^j
  for (long j = 0; j <= k; ++j) {
    s += Rat(binomial_int(k, j)) * bernoulli_rational(k - j) * xp;
    xp *= x;
  }
  return s;
}

GeneralizedBernoulli generalized_bernoulli(long k, const DirichletCharacter& chi) {
  if (k < 1) throw std::invalid_argument("generalized_bernoulli: k >= 1");
  if (!chi.is_primitive())
    throw std::invalid_argument("generalized_bernoulli: character must be primitive");
  long f = chi.conductor();
  long ambient = chi.value_ambient();
  if (f == 1) {
    // B_k(1) = B_k for k != 1 and 1/2 = -B_1 for k = 1
    Rat b = bernoulli_rational(k);
    if (k == 1) b = -b;
    return {k, chi, CyclotomicNumber(ambient, b)};
  }
  CyclotomicNumber sum(ambient);
  for (long a = 1; a <= f; ++a) {
    auto e = chi.value_exponent(a);
    if (!e) continue;
    Rat b = bernoulli_poly_at(k, Rat(a, f));
    sum = sum + chi.value_in(ambient, a).scale(b);
  }
  Rat scale = Rat(int_pow(Int(f), k - 1));
  return {k, chi, sum.scale(scale)};
}

long bkchi_over_2k_valuation(long k, const DirichletCharacter& chi, long p) {
  if (k < 1) throw std::invalid_argument("bkchi_over_2k_valuation: k >= 1");
  bool even_k = (k % 2 == 0);
  if (even_k != chi.is_even())
    throw std::invalid_argument("bkchi_over_2k_valuation: parity mismatch, B vanishes");
  auto b = generalized_bernoulli(k, chi);
  CyclotomicNumber v = b.value.scale(Rat(Int(1), Int(2) * k));
  if (v.is_zero()) return pi_val_infinity;
  if (auto r = v.as_rational()) return val_p(*r, p);
  LocalRing ring = local_ring_for(chi, p, 1);
  if (!ring.coherent())
    throw std::invalid_argument("bkchi_over_2k_valuation: value ring is not local at p");
  return ring.valuation(v);
}

}  // namespace eiscong
