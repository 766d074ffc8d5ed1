#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eiscong {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

Int int_pow(const Int& base, long exp);
Int pow_mod(Int base, Int exp, const Int& mod);

/// p-adic valuation of a nonzero integer; throws on zero.
long val_p(const Int& x, long p);
/// p-adic valuation of a nonzero rational (may be negative).
long val_p(const Rat& x, long p);

Int binomial_int(long n, long k);

/// Trial-division factorization, prime-ascending.
std::vector<std::pair<long, int>> factorize(long n);
std::vector<long> divisors_sorted(long n);
long euler_phi(long n);
bool is_prime(long n);

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
long multiplicative_order(long a, long n);

/// Smallest residue generating the (cyclic) unit group of an odd prime power q^e.
long smallest_primitive_root(long prime_power);

long gcd_long(long a, long b);
long lcm_long(long a, long b);
long mod_inverse(long a, long n);

}  // namespace eiscong
