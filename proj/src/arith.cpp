#include "eiscong/arith.hpp"

#include <numeric>

namespace eiscong {

Int int_pow(const Int& base, long exp) {
  if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
  Int r = 1, b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Int pow_mod(Int base, Int exp, const Int& mod) {
  if (mod <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
  Int r = 1;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (bit_test(exp, 0)) r = (r * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return r;
}

long val_p(const Int& x, long p) {
  if (x == 0) throw std::invalid_argument("val_p: zero argument");
  Int y = abs(x);
  long v = 0;
  while (y % p == 0) {
    y /= p;
    ++v;
  }
  return v;
}

long val_p(const Rat& x, long p) {
  if (x == 0) throw std::invalid_argument("val_p: zero argument");
  return val_p(rat_num(x), p) - val_p(rat_den(x), p);
}

Int binomial_int(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<long, int>> fs;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fs.emplace_back(p, e);
    }
  }
  if (n > 1) fs.emplace_back(n, 1);
  return fs;
}

std::vector<long> divisors_sorted(long n) {
  std::vector<long> ds{1};
  for (auto [p, e] : factorize(n)) {
    size_t old = ds.size();
    long q = 1;
    for (int i = 1; i <= e; ++i) {
      q *= p;
      for (size_t j = 0; j < old; ++j) ds.push_back(ds[j] * q);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

long euler_phi(long n) {
  long r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

long multiplicative_order(long a, long n) {
  a %= n;
  if (a < 0) a += n;
  if (std::gcd(a, n) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
  if (n == 1) return 1;
  long phi = euler_phi(n);
  long ord = phi;
  for (auto [p, e] : factorize(phi)) {
    while (ord % p == 0 &&
           pow_mod(Int(a), Int(ord / p), Int(n)) == 1)
      ord /= p;
  }
  return ord;
}

long smallest_primitive_root(long prime_power) {
  auto fs = factorize(prime_power);
  if (fs.size() != 1 || fs[0].first == 2)
    throw std::invalid_argument("smallest_primitive_root: need an odd prime power");
  long phi = euler_phi(prime_power);
  for (long g = 2; g < prime_power; ++g) {
    if (std::gcd(g, prime_power) != 1) continue;
    if (multiplicative_order(g, prime_power) == phi) return g;
  }
  throw std::logic_error("smallest_primitive_root: none found");
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long mod_inverse(long a, long n) {
  long t = 0, newt = 1, r = n, newr = ((a % n) + n) % n;
  while (newr != 0) {
    long q = r / newr;
    std::swap(t, newt);
    newt -= q * t;
    std::swap(r, newr);
    newr -= q * r;
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return ((t % n) + n) % n;
}

}  // namespace eiscong
