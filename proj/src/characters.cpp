#include "eiscong/characters.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace eiscong {

namespace {

std::map<long, UnitGroupStructure> g_ug_cache;
std::mutex g_ug_mutex;

UnitGroupStructure build_unit_group(long n) {
  UnitGroupStructure ug;
  ug.modulus = n;
  if (n <= 2) return ug;
  for (auto [q, e] : factorize(n)) {
    long qe = 1;
    for (int i = 0; i < e; ++i) qe *= q;
    long rest = n / qe;
    auto lift = [&](long r) {
      // CRT: residue = r mod q^e, 1 mod rest
      if (rest == 1) return r % n;
      long m1 = mod_inverse(rest % qe, qe);
      long long v = (static_cast<long long>(r) * rest % n) * m1 % n;
      long inv_qe = mod_inverse(qe % rest, rest);
      v = (v + (static_cast<long long>(qe) * inv_qe) % n) % n;
      return static_cast<long>(v);
    };
    if (q == 2) {
      if (e == 1) continue;  // trivial factor
      if (e == 2) {
        ug.generators.emplace_back(lift(3), 2);
      } else {
        ug.generators.emplace_back(lift(qe - 1), 2);
        ug.generators.emplace_back(lift(3), qe / 4);
      }
    } else {
      ug.generators.emplace_back(lift(smallest_primitive_root(qe)), euler_phi(qe));
    }
  }
  ug.is_cyclic = ug.generators.size() <= 1;
  // A pair of generators with coprime orders is still cyclic.
  if (ug.generators.size() == 2 &&
      std::gcd(ug.generators[0].second, ug.generators[1].second) == 1)
    ug.is_cyclic = true;
  return ug;
}

}  // namespace

const UnitGroupStructure& unit_group_generators(long modulus) {
  if (modulus < 1) throw std::invalid_argument("unit_group_generators: modulus >= 1");
  std::lock_guard<std::mutex> lock(g_ug_mutex);
  auto it = g_ug_cache.find(modulus);
  if (it == g_ug_cache.end()) it = g_ug_cache.emplace(modulus, build_unit_group(modulus)).first;
  return it->second;
}

DirichletCharacter DirichletCharacter::trivial(long modulus) {
  const auto& ug = unit_group_generators(modulus);
  DirichletCharacter chi;
  chi.modulus_ = modulus;
  chi.order_ = 1;
  chi.exps_.assign(ug.generators.size(), 0);
  chi.build_table();
  chi.conductor_ = 1;
  return chi;
}

DirichletCharacter DirichletCharacter::from_exponents(long modulus, long order,
                                                      std::vector<long> exps) {
  const auto& ug = unit_group_generators(modulus);
  if (exps.size() != ug.generators.size())
    throw std::invalid_argument("DirichletCharacter: wrong number of exponents");
  if (order < 1) throw std::invalid_argument("DirichletCharacter: order >= 1");
  for (size_t i = 0; i < exps.size(); ++i) {
    exps[i] = ((exps[i] % order) + order) % order;
    long gord = ug.generators[i].second;
    if ((static_cast<long long>(exps[i]) * gord) % order != 0)
      throw std::invalid_argument("DirichletCharacter: exponent incompatible with generator order");
  }
  // normalize to the exact image order
  long g = order;
  for (long e : exps) g = std::gcd(g, e);
  long n = order / g;
  for (auto& e : exps) e /= g;
  DirichletCharacter chi;
  chi.modulus_ = modulus;
  chi.order_ = n;
  chi.exps_ = std::move(exps);
  chi.build_table();
  chi.conductor_ = chi.compute_conductor();
  return chi;
}

void DirichletCharacter::build_table() {
  const auto& ug = unit_group_generators(modulus_);
  table_.assign(modulus_ == 1 ? 1 : modulus_, -1);
  if (modulus_ == 1) {
    table_[0] = 0;  // chi(anything) = 1 for modulus 1; index by a mod 1
    return;
  }
  // enumerate units as products of generator powers
  size_t k = ug.generators.size();
  std::vector<long> counter(k, 0);
  while (true) {
    long long res = 1;
    long exp = 0;
    for (size_t i = 0; i < k; ++i) {
      res = res * pow_mod(Int(ug.generators[i].first), Int(counter[i]), Int(modulus_))
                      .convert_to<long long>() %
            modulus_;
      exp = static_cast<long>((exp + static_cast<long long>(counter[i]) * exps_[i]) % order_);
    }
    table_[static_cast<long>(res)] = exp;
    size_t i = 0;
    for (; i < k; ++i) {
      if (++counter[i] < ug.generators[i].second) break;
      counter[i] = 0;
    }
    if (i == k) break;
    if (k == 0) break;
  }
  if (k == 0) table_[1 % modulus_] = 0;
}

long DirichletCharacter::compute_conductor() const {
  for (long f : divisors_sorted(modulus_)) {
    // chi factors through f iff chi(a) = 1 whenever a = 1 mod f, gcd(a, N) = 1
    bool ok = true;
    for (long a = 1; a < modulus_ && ok; a += f) {
      if (std::gcd(a, modulus_) != 1) continue;
      if (table_[a] != 0) ok = false;
    }
    if (modulus_ == 1) ok = true;
    if (ok) return f;
  }
  return modulus_;
}

bool DirichletCharacter::is_even() const {
  if (modulus_ <= 2) return true;
  return table_[modulus_ - 1] == 0;
}

std::optional<long> DirichletCharacter::value_exponent(long a) const {
  a %= modulus_;
  if (a < 0) a += modulus_;
  if (modulus_ == 1) return 0;
  long t = table_[a];
  if (t < 0) return std::nullopt;
  return t;
}

CyclotomicNumber DirichletCharacter::value(long a) const { return value_in(value_ambient(), a); }

CyclotomicNumber DirichletCharacter::value_in(long ambient, long a) const {
  auto e = value_exponent(a);
  if (!e) return CyclotomicNumber(ambient);  // zero
  return CyclotomicNumber::zeta_pow(ambient, order_, *e);
}

DirichletCharacter DirichletCharacter::inverse() const { return power(-1); }

DirichletCharacter DirichletCharacter::power(long e) const {
  std::vector<long> exps = exps_;
  e %= order_;
  if (e < 0) e += order_;
  for (auto& x : exps) x = static_cast<long>((static_cast<long long>(x) * e) % order_);
  return from_exponents(modulus_, order_, std::move(exps));
}

DirichletCharacter DirichletCharacter::times(const DirichletCharacter& other) const {
  long m = std::lcm(modulus_, other.modulus_);
  long L = std::lcm(order_, other.order_);
  const auto& ug = unit_group_generators(m);
  std::vector<long> exps;
  exps.reserve(ug.generators.size());
  for (auto [g, gord] : ug.generators) {
    auto e1 = value_exponent(g % modulus_);
    auto e2 = other.value_exponent(g % other.modulus_);
    if (!e1 || !e2)
      throw std::logic_error("DirichletCharacter::times: generator not a unit for a factor");
    long long e = static_cast<long long>(*e1) * (L / order_) +
                  static_cast<long long>(*e2) * (L / other.order_);
    exps.push_back(static_cast<long>(e % L));
  }
  return from_exponents(m, L, std::move(exps));
}

DirichletCharacter DirichletCharacter::change_modulus(long m) const {
  if (m % conductor_ != 0)
    throw std::invalid_argument("change_modulus: conductor does not divide target modulus");
  const auto& ug = unit_group_generators(m);
  std::vector<long> exps;
  exps.reserve(ug.generators.size());
  for (auto [g, gord] : ug.generators) {
    // evaluate chi at a residue congruent to g mod m that is a unit mod N:
    // CRT-lift g to a unit modulo lcm(m, N), then read the value mod N.
    long M = std::lcm(m, modulus_);
    long r = -1;
    for (long x = g; x < M + g; x += m) {
      long xm = x % M;
      if (std::gcd(xm, M) == 1) {
        r = xm;
        break;
      }
    }
    if (r < 0) throw std::logic_error("change_modulus: no unit lift");
    auto e = value_exponent(r % modulus_);
    if (!e) throw std::logic_error("change_modulus: lift not a unit mod N");
    exps.push_back(*e);
  }
  return from_exponents(m, order_, std::move(exps));
}

bool DirichletCharacter::same_values(const DirichletCharacter& other) const {
  if (modulus_ != other.modulus_) return false;
  if (order_ != other.order_) return false;
  for (long a = 0; a < modulus_; ++a)
    if (table_[a] != other.table_[a]) return false;
  return true;
}

std::string DirichletCharacter::serialize() const {
  std::ostringstream os;
  os << modulus_ << ":" << order_ << ":[";
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (i) os << ",";
    os << exps_[i];
  }
  os << "]";
  return os.str();
}

DirichletCharacter DirichletCharacter::parse(const std::string& text) {
  std::istringstream is(text);
  long N = 0, n = 0;
  char c;
  if (!(is >> N >> c) || c != ':') throw std::invalid_argument("character parse: bad modulus");
  if (!(is >> n >> c) || c != ':') throw std::invalid_argument("character parse: bad order");
  if (!(is >> c) || c != '[') throw std::invalid_argument("character parse: expected [");
  std::vector<long> exps;
  if (is.peek() == ']') {
    is >> c;
  } else {
    while (true) {
      long e;
      if (!(is >> e >> c)) throw std::invalid_argument("character parse: bad exponent list");
      exps.push_back(e);
      if (c == ']') break;
      if (c != ',') throw std::invalid_argument("character parse: expected , or ]");
    }
  }
  return from_exponents(N, n, std::move(exps));
}

std::vector<DirichletCharacter> all_characters(long modulus) {
  const auto& ug = unit_group_generators(modulus);
  std::vector<DirichletCharacter> out;
  size_t k = ug.generators.size();
  std::vector<long> counter(k, 0);
  long L = 1;
  for (auto [g, gord] : ug.generators) L = std::lcm(L, gord);
  while (true) {
    std::vector<long> exps(k);
    for (size_t i = 0; i < k; ++i)
      exps[i] = static_cast<long>(static_cast<long long>(counter[i]) * (L / ug.generators[i].second));
    out.push_back(DirichletCharacter::from_exponents(modulus, L, std::move(exps)));
    size_t i = 0;
    for (; i < k; ++i) {
      if (++counter[i] < ug.generators[i].second) break;
      counter[i] = 0;
    }
    if (i == k || k == 0) break;
  }
  return out;
}

std::vector<DirichletCharacter> primitive_characters(long modulus) {
  std::vector<DirichletCharacter> out;
  for (auto& chi : all_characters(modulus))
    if (chi.is_primitive()) out.push_back(std::move(chi));
  return out;
}

std::vector<DirichletCharacter> primitive_characters_of_order(long modulus, long order) {
  std::vector<DirichletCharacter> out;
  for (auto& chi : primitive_characters(modulus))
    if (chi.image_order() == order) out.push_back(std::move(chi));
  return out;
}

std::pair<DirichletCharacter, DirichletCharacter> factor_p_part(const DirichletCharacter& chi,
                                                                long p) {
  if (!chi.is_primitive())
    throw std::invalid_argument("factor_p_part: character must be primitive");
  long N = chi.modulus();
  long pv = 1;
  long rest = N;
  while (rest % p == 0) {
    rest /= p;
    pv *= p;
  }
  auto component = [&](long mod_part, long other_part) {
    const auto& ug = unit_group_generators(mod_part);
    std::vector<long> exps;
    exps.reserve(ug.generators.size());
    for (auto [g, gord] : ug.generators) {
      // CRT: x = g mod mod_part, x = 1 mod other_part
      long x;
      if (other_part == 1) {
        x = g % N;
      } else {
        long m1 = mod_inverse(other_part % mod_part, mod_part);
        long long v = (static_cast<long long>(g) * other_part % N) * m1 % N;
        long m2 = mod_inverse(mod_part % other_part, other_part);
        v = (v + static_cast<long long>(mod_part) * m2) % N;
        x = static_cast<long>(v);
      }
      auto e = chi.value_exponent(x);
      if (!e) throw std::logic_error("factor_p_part: CRT lift not a unit");
      exps.push_back(*e);
    }
    return DirichletCharacter::from_exponents(mod_part, chi.image_order(), std::move(exps));
  };
  return {component(pv, rest), component(rest, pv)};
}

Int teichmuller(long p, const Int& a, long M) {
  if (M < 1) throw std::invalid_argument("teichmuller: M >= 1");
  if (a % p == 0) throw std::invalid_argument("teichmuller: argument divisible by p");
  Int pM = int_pow(Int(p), M);
  if (p == 2) {
    Int r = ((a % 4) + 4) % 4;
    return r == 1 ? Int(1) : pM - 1;
  }
  Int t = ((a % pM) + pM) % pM;
  for (long i = 0; i < 4 * M + 4; ++i) {
    Int next = pow_mod(t, Int(p), pM);
    if (next == t) return t;
    t = next;
  }
  throw std::logic_error("teichmuller: did not stabilize");
}

long p_adic_factor_count(long n, long p) {
  if (n < 1) throw std::invalid_argument("p_adic_factor_count: n >= 1");
  long nprime = n;
  while (nprime % p == 0) nprime /= p;
  if (nprime == 1) return 1;
  return euler_phi(nprime) / multiplicative_order(p % nprime, nprime);
}

}  // namespace eiscong
