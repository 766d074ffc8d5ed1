#include "eiscong/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace eiscong {

IdealHnf IdealHnf::unit(long ambient) {
  IdealHnf i(ambient);
  long phi = euler_phi(ambient);
  for (long k = 0; k < phi; ++k) {
    std::vector<Int> row(phi, Int(0));
    row[k] = 1;
    i.rows_.push_back(std::move(row));
  }
  return i;
}

void IdealHnf::absorb(const CyclotomicNumber& g) {
  if (!g.is_integral())
    throw std::invalid_argument("IdealHnf: generators must be integral (denominator 1)");
  if (g.ambient() != n_) throw std::invalid_argument("IdealHnf: mixed ambient rings");
  if (g.is_zero()) return;
  // span of g * zeta^j for j = 0..phi-1
  CyclotomicNumber zeta = CyclotomicNumber::zeta_pow(n_, n_, 1);
  CyclotomicNumber cur = g;
  long phi = euler_phi(n_);
  for (long j = 0; j < phi; ++j) {
    hnf_insert(rows_, cur.numerator());
    if (j + 1 < phi) cur = cur * zeta;
  }
}

IdealHnf IdealHnf::from_generators(long ambient, const std::vector<CyclotomicNumber>& gens) {
  if (gens.empty()) throw std::invalid_argument("IdealHnf: need at least one generator");
  IdealHnf i(ambient);
  for (const auto& g : gens) i.absorb(g);
  hnf_reduce_above(i.rows_);
  return i;
}

IdealHnf IdealHnf::principal(const CyclotomicNumber& g) {
  return from_generators(g.ambient(), {g});
}

bool IdealHnf::is_unit() const { return norm() == 1; }

Int IdealHnf::norm() const {
  return hnf_determinant(rows_, euler_phi(n_));
}

bool IdealHnf::contains(const CyclotomicNumber& x) const {
  if (x.ambient() != n_) throw std::invalid_argument("IdealHnf::contains: mixed ambient rings");
  if (!x.is_integral()) return false;
  if (x.is_zero()) return true;
  if (rows_.empty()) return false;
  return lattice_contains(rows_, x.numerator());
}

bool IdealHnf::contains(const IdealHnf& other) const {
  if (n_ != other.n_) throw std::invalid_argument("IdealHnf::contains: mixed ambient rings");
  if (other.is_zero()) return true;
  if (is_zero()) return false;
  for (const auto& r : other.rows_)
    if (!lattice_contains(rows_, r)) return false;
  return true;
}

IdealHnf IdealHnf::times(const IdealHnf& other) const {
  if (n_ != other.n_) throw std::invalid_argument("IdealHnf::times: mixed ambient rings");
  if (is_zero() || other.is_zero()) return zero(n_);
  IdealHnf r(n_);
  for (const auto& a : rows_) {
    CyclotomicNumber ca(n_, a, Int(1));
    for (const auto& b : other.rows_) {
      CyclotomicNumber cb(n_, b, Int(1));
      r.absorb(ca * cb);
    }
  }
  hnf_reduce_above(r.rows_);
  return r;
}

IdealHnf IdealHnf::plus(const IdealHnf& other) const {
  if (n_ != other.n_) throw std::invalid_argument("IdealHnf::plus: mixed ambient rings");
  IdealHnf r = *this;
  for (const auto& b : other.rows_) {
    auto v = b;
    hnf_insert(r.rows_, std::move(v));
  }
  hnf_reduce_above(r.rows_);
  return r;
}

IdealHnf IdealHnf::power(long e) const {
  if (e < 0) throw std::invalid_argument("IdealHnf::power: negative exponent");
  IdealHnf r = unit(n_);
  IdealHnf b = *this;
  while (e > 0) {
    if (e & 1) r = r.times(b);
    b = b.times(b);
    e >>= 1;
  }
  return r;
}

std::string IdealHnf::to_text() const {
  std::ostringstream os;
  os << n_ << ";";
  if (rows_.empty()) {
    os << " zero";
    return os.str();
  }
  for (const auto& r : rows_) {
    os << " [";
    for (size_t j = 0; j < r.size(); ++j) {
      if (j) os << ",";
      os << r[j].str();
    }
    os << "]";
  }
  return os.str();
}

IdealOrder ideal_compare(const IdealHnf& a, const IdealHnf& b) {
  bool ab = b.contains(a);  // a subseteq b
  bool ba = a.contains(b);
  if (ab && ba) return IdealOrder::equal;
  if (ab) return IdealOrder::first_inside_second;
  if (ba) return IdealOrder::second_inside_first;
  return IdealOrder::incomparable;
}

long pi_valuation(const CyclotomicNumber& x, long p, long m) {
  if (m < 1 || !is_prime(p)) throw std::invalid_argument("pi_valuation: need prime p, m >= 1");
  long pm = 1;
  for (long i = 0; i < m; ++i) pm *= p;
  long n = x.ambient();
  if (root_group_order(n) % pm != 0)
    throw std::invalid_argument("pi_valuation: ambient ring lacks the p^m-th roots of unity");
  if (x.is_zero()) return pi_val_infinity;
  long vden = val_p(x.denominator(), p);
  long phi_pm = euler_phi(pm);
  if (pm == 2) {
    // varpi = 1 - (-1) = 2; membership in (2^e) is coordinate divisibility.
    long v = pi_val_infinity;
    for (const auto& c : x.numerator())
      if (c != 0) v = std::min(v, val_p(c, p));
    return v - vden;
  }
  CyclotomicNumber num(n, x.numerator(), Int(1));
  if (canonical_conductor(n) == canonical_conductor(pm)) {
    // totally ramified with a single prime above p and residue degree 1:
    // v_varpi(y) = v_p(N(y)) for integral y, and v_varpi(p) = phi(p^m).
    return val_p(num.numerator_norm(), p) - phi_pm * vden;
  }
  // General ambient: scan memberships of powers of (1 - zeta_{p^m}).
  CyclotomicNumber varpi =
      CyclotomicNumber::from_int(n, 1) - CyclotomicNumber::zeta_pow(n, pm, 1);
  IdealHnf pw = IdealHnf::principal(varpi);
  IdealHnf step = pw;
  long v = 0;
  while (pw.contains(num)) {
    ++v;
    pw = pw.times(step);
  }
  return v - vden * phi_pm;
}

}  // namespace eiscong
