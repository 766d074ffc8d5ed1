#include "eiscong/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace eiscong {

namespace {

using Poly = std::vector<Int>;  // ascending degree

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Exact division of a by monic b.
Poly poly_div_exact_monic(Poly a, const Poly& b) {
  poly_trim(a);
  Poly q;
  if (a.empty()) return q;
  long db = static_cast<long>(b.size()) - 1;
  long da = static_cast<long>(a.size()) - 1;
  q.assign(da - db + 1, Int(0));
  for (long i = da; i >= db; --i) {
    Int c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (long j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  poly_trim(a);
  if (!a.empty()) throw std::logic_error("poly_div_exact_monic: nonzero remainder");
  return q;
}

// Remainder of a mod monic b.
Poly poly_rem_monic(Poly a, const Poly& b) {
  long db = static_cast<long>(b.size()) - 1;
  poly_trim(a);
  while (static_cast<long>(a.size()) - 1 >= db) {
    long da = static_cast<long>(a.size()) - 1;
    Int c = a.back();
    for (long j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
    poly_trim(a);
  }
  return a;
}

std::map<long, Poly> g_phi_cache;
std::mutex g_phi_mutex;

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n >= 1");
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = g_phi_cache.find(n);
  if (it != g_phi_cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
  // inside the lock (the recursion only touches smaller divisors).
  std::vector<long> stack{n};
  while (!stack.empty()) {
    long m = stack.back();
    if (g_phi_cache.count(m)) {
      stack.pop_back();
      continue;
    }
    bool ready = true;
    for (long d : divisors_sorted(m)) {
      if (d < m && !g_phi_cache.count(d)) {
        stack.push_back(d);
        ready = false;
      }
    }
    if (!ready) continue;
    Poly xn(m + 1, Int(0));
    xn[0] = -1;
    xn[m] = 1;
    for (long d : divisors_sorted(m))
      if (d < m) xn = poly_div_exact_monic(xn, g_phi_cache[d]);
    g_phi_cache[m] = xn;
    stack.pop_back();
  }
  return g_phi_cache[n];
}

long canonical_conductor(long n) {
  if (n <= 0) throw std::invalid_argument("canonical_conductor: n >= 1");
  if (n % 2 == 0 && (n / 2) % 2 == 1) n /= 2;
  if (n == 1 || n == 2) return 1;
  return n;
}

long root_group_order(long n) { return n % 2 == 0 ? n : 2 * n; }

CyclotomicNumber::CyclotomicNumber(long ambient)
    : n_(ambient), num_(euler_phi(ambient), Int(0)), den_(1) {
  if (ambient < 1) throw std::invalid_argument("CyclotomicNumber: ambient >= 1");
}

CyclotomicNumber::CyclotomicNumber(long ambient, const Rat& value) : CyclotomicNumber(ambient) {
  num_[0] = rat_num(value);
  den_ = rat_den(value);
  normalize();
}

CyclotomicNumber::CyclotomicNumber(long ambient, std::vector<Int> numerator, Int denominator)
    : n_(ambient), num_(std::move(numerator)), den_(std::move(denominator)) {
  long phi = euler_phi(ambient);
  if (static_cast<long>(num_.size()) > phi) {
    Poly r = poly_rem_monic(num_, cyclotomic_polynomial(n_));
    num_ = std::move(r);
  }
  num_.resize(phi, Int(0));
  if (den_ == 0) throw std::invalid_argument("CyclotomicNumber: zero denominator");
  normalize();
}

CyclotomicNumber CyclotomicNumber::from_int(long ambient, const Int& v) {
  CyclotomicNumber x(ambient);
  x.num_[0] = v;
  return x;
}

CyclotomicNumber CyclotomicNumber::zeta_pow(long ambient, long order, long exp) {
  long L = root_group_order(ambient);
  if (order < 1 || L % order != 0)
    throw std::invalid_argument("zeta_pow: order does not divide the root group order");
  long t = ((exp % order) + order) % order * (L / order);  // power of the canonical generator
  // canonical generator xi of mu_L: zeta_n when n even, -zeta_n^{(n+1)/2} when n odd.
  bool minus = false;
  long zexp = 0;
  if (ambient == 1) {
    minus = (t % 2 != 0);
  } else if (ambient % 2 == 0) {
    zexp = t % ambient;
  } else {
    minus = (t % 2 != 0);
    zexp = static_cast<long>((static_cast<long long>(t) * ((ambient + 1) / 2)) % ambient);
  }
  std::vector<Int> poly(zexp + 1, Int(0));
  poly[zexp] = minus ? -1 : 1;
  return CyclotomicNumber(ambient, std::move(poly), Int(1));
}

void CyclotomicNumber::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Int g = den_;
  for (const auto& c : num_) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  if (g > 1) {
    den_ /= g;
    for (auto& c : num_) c /= g;
  }
  bool zero = std::all_of(num_.begin(), num_.end(), [](const Int& c) { return c == 0; });
  if (zero) den_ = 1;
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Int& c) { return c == 0; });
}

bool CyclotomicNumber::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

std::optional<Rat> CyclotomicNumber::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return Rat(num_[0], den_);
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
  if (n_ != o.n_) throw std::invalid_argument("cyclotomic +: mismatched ambient rings");
  CyclotomicNumber r(n_);
  r.den_ = den_ * o.den_;
  for (size_t i = 0; i < num_.size(); ++i) r.num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
  r.normalize();
  return r;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
  return *this + (-o);
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
  if (n_ != o.n_) throw std::invalid_argument("cyclotomic *: mismatched ambient rings");
  Poly prod = poly_mul(num_, o.num_);
  Poly red = poly_rem_monic(prod, cyclotomic_polynomial(n_));
  return CyclotomicNumber(n_, std::move(red), den_ * o.den_);
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic inverse: division by zero");
  // Extended Euclid over Q[x] against Phi_n, tracking r_i = t_i * num mod Phi.
  using QPoly = std::vector<Rat>;
  auto trim = [](QPoly& p) { while (!p.empty() && p.back() == 0) p.pop_back(); };
  QPoly r0, r1, s0, s1{Rat(1)};
  for (const auto& c : cyclotomic_polynomial(n_)) r0.push_back(Rat(c));
  for (const auto& c : num_) r1.push_back(Rat(c));
  trim(r1);
  while (r1.size() > 1) {
    // divide r0 by r1
    QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rat(0));
    QPoly rem = r0;
    while (rem.size() >= r1.size()) {
      size_t shift = rem.size() - r1.size();
      Rat c = rem.back() / r1.back();
      q[shift] = c;
      for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
      trim(rem);
      if (rem.empty()) break;
    }
    // (r0, s0), (r1, s1) <- (r1, s1), (rem, s0 - q*s1)
    QPoly qs1;
    if (!s1.empty()) {
      qs1.assign(q.size() + s1.size() - 1, Rat(0));
      for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < s1.size(); ++j) qs1[i + j] += q[i] * s1[j];
    }
    QPoly ns = s0;
    if (ns.size() < qs1.size()) ns.resize(qs1.size(), Rat(0));
    for (size_t i = 0; i < qs1.size(); ++i) ns[i] -= qs1[i];
    r0 = r1;
    s0 = s1;
    r1 = rem;
    s1 = ns;
  }
  if (r1.empty()) throw std::domain_error("cyclotomic inverse: element not invertible");
  Rat c = r1[0];
  // inverse of num (as poly) is s1 / c; overall inverse multiplies back den_.
  QPoly inv = s1.empty() ? QPoly{Rat(0)} : s1;
  Int common_den = 1;
  for (auto& x : inv) {
    x /= c;
    common_den = lcm(common_den, rat_den(x));
  }
  std::vector<Int> numv(inv.size());
  for (size_t i = 0; i < inv.size(); ++i) numv[i] = rat_num(inv[i]) * (common_den / rat_den(inv[i]));
  CyclotomicNumber r(n_, std::move(numv), common_den);
  return r.scale(Rat(den_));
}

CyclotomicNumber CyclotomicNumber::operator/(const CyclotomicNumber& o) const {
  return *this * o.inverse();
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
  return n_ == o.n_ && den_ == o.den_ && num_ == o.num_;
}

CyclotomicNumber CyclotomicNumber::scale(const Rat& r) const {
  CyclotomicNumber x = *this;
  Int rn = rat_num(r);
  for (auto& c : x.num_) c *= rn;
  x.den_ *= rat_den(r);
  x.normalize();
  return x;
}

CyclotomicNumber CyclotomicNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicNumber r = from_int(n_, 1);
  CyclotomicNumber b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Int CyclotomicNumber::numerator_norm() const {
  long phi = degree();
  if (phi == 1) return num_[0];
  // Determinant of the multiplication-by-x matrix on the power basis,
  // fraction-free Bareiss elimination.
  std::vector<std::vector<Int>> m(phi, std::vector<Int>(phi, Int(0)));
  const Poly& Phi = cyclotomic_polynomial(n_);
  Poly cur = num_;
  for (long i = 0; i < phi; ++i) {
    for (long j = 0; j < static_cast<long>(cur.size()) && j < phi; ++j) m[i][j] = cur[j];
    if (i + 1 < phi) cur = poly_rem_monic(poly_mul(cur, Poly{Int(0), Int(1)}), Phi);
  }
  Int denom = 1, sign = 1;
  for (long c = 0; c < phi; ++c) {
    long piv = -1;
    for (long r = c; r < phi; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      sign = -sign;
    }
    for (long r = c + 1; r < phi; ++r) {
      for (long j = c + 1; j < phi; ++j) m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / denom;
      m[r][c] = 0;
    }
    denom = m[c][c];
  }
  return sign * m[phi - 1][phi - 1];
}

Rat CyclotomicNumber::norm() const {
  Int nn = numerator_norm();
  return Rat(nn, int_pow(den_, degree()));
}

CyclotomicNumber CyclotomicNumber::promote(long m) const {
  if (m == n_) return *this;
  if (is_rational()) return CyclotomicNumber(m, Rat(num_[0], den_));
  if (root_group_order(m) % root_group_order(n_) != 0)
    throw std::invalid_argument("promote: value does not lie in the target ring");
  // zeta_n as an element of Q(zeta_m): the canonical n-th root there.
  CyclotomicNumber z = zeta_pow(m, n_, 1);
  CyclotomicNumber acc(m);
  CyclotomicNumber zp = from_int(m, 1);
  for (size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] != 0) acc = acc + zp.scale(Rat(num_[i]));
    if (i + 1 < num_.size()) zp = zp * z;
  }
  return acc.scale(Rat(Int(1), den_));
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    Int c = num_[i];
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int a = abs(c);
    if (i == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  std::string s = os.str();
  if (den_ != 1) s = "(" + s + ")/" + den_.str();
  return s;
}

CyclotomicNumber cyc_arith(const CyclotomicNumber& a, const CyclotomicNumber& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::logic_error("cyc_arith: bad op");
}

}  // namespace eiscong
