#include "eiscong/localring.hpp"

#include <algorithm>

namespace eiscong {

namespace {

using FPoly = std::vector<long>;  // over F_p, ascending, trimmed

void fp_trim(FPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FPoly fp_mul(const FPoly& a, const FPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  FPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<long>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
  fp_trim(r);
  return r;
}

FPoly fp_rem(FPoly a, const FPoly& b, long p) {
  long binv = mod_inverse(b.back(), p);
  fp_trim(a);
  while (a.size() >= b.size()) {
    long c = static_cast<long>(static_cast<long long>(a.back()) * binv % p);
    size_t shift = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j)
      a[shift + j] = static_cast<long>(((a[shift + j] - static_cast<long long>(c) * b[j]) % p + p) % p);
    fp_trim(a);
  }
  return a;
}

FPoly fp_gcd(FPoly a, FPoly b, long p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    long inv = mod_inverse(a.back(), p);
    for (auto& c : a) c = static_cast<long>(static_cast<long long>(c) * inv % p);
  }
  return a;
}

FPoly fp_derivative(const FPoly& a, long p) {
  FPoly d;
  for (size_t i = 1; i < a.size(); ++i)
    d.push_back(static_cast<long>(static_cast<long long>(a[i]) * (i % p) % p));
  fp_trim(d);
  return d;
}

FPoly fp_div_exact(const FPoly& a, const FPoly& b, long p) {
  // exact quotient a / b
  FPoly r = a, q;
  fp_trim(r);
  long binv = mod_inverse(b.back(), p);
  if (r.size() < b.size()) return {};
  q.assign(r.size() - b.size() + 1, 0);
  while (r.size() >= b.size()) {
    long c = static_cast<long>(static_cast<long long>(r.back()) * binv % p);
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j)
      r[shift + j] = static_cast<long>(((r[shift + j] - static_cast<long long>(c) * b[j]) % p + p) % p);
    fp_trim(r);
    if (r.empty()) break;
  }
  return q;
}

// Product of the distinct irreducible factors (squarefree radical) over F_p.
FPoly fp_radical(FPoly h, long p) {
  fp_trim(h);
  while (true) {
    FPoly d = fp_derivative(h, p);
    if (d.empty()) {
      // h is a polynomial in x^p; take the p-th root (Frobenius fixes F_p).
      FPoly w((h.size() - 1) / p + 1, 0);
      for (size_t i = 0; i < h.size(); i += p) w[i / p] = h[i];
      h = std::move(w);
      continue;
    }
    FPoly g = fp_gcd(h, d, p);
    if (g.size() <= 1) return h;
    h = fp_div_exact(h, g, p);
  }
}

// extended Euclid over F_p[x]: returns u with u*a = gcd mod m (gcd must be 1)
FPoly fp_inverse_mod(const FPoly& a, const FPoly& m, long p) {
  FPoly r0 = m, r1 = fp_rem(a, m, p);
  FPoly t0, t1{1};
  while (!r1.empty() && r1.size() > 1) {
    FPoly q = fp_div_exact(r0, r1, p);
    // rem = r0 - q*r1
    FPoly qr = fp_mul(q, r1, p);
    FPoly rem = r0;
    rem.resize(std::max(rem.size(), qr.size()), 0);
    for (size_t i = 0; i < qr.size(); ++i) rem[i] = ((rem[i] - qr[i]) % p + p) % p;
    fp_trim(rem);
    FPoly qt = fp_mul(q, t1, p);
    FPoly nt = t0;
    nt.resize(std::max(nt.size(), qt.size()), 0);
    for (size_t i = 0; i < qt.size(); ++i) nt[i] = ((nt[i] - qt[i]) % p + p) % p;
    fp_trim(nt);
    r0 = std::move(r1);
    t0 = std::move(t1);
    r1 = std::move(rem);
    t1 = std::move(nt);
  }
  if (r1.empty()) throw std::domain_error("fp_inverse_mod: not invertible");
  long cinv = mod_inverse(r1[0], p);
  for (auto& c : t1) c = static_cast<long>(static_cast<long long>(c) * cinv % p);
  return fp_rem(t1, m, p);
}

Int int_mod_inverse(const Int& a, const Int& m) {
  Int t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
  while (newr != 0) {
    Int q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw std::domain_error("int_mod_inverse: not invertible");
  return ((t % m) + m) % m;
}

}  // namespace

LocalRing::LocalRing(long p, long ambient, long M) : p_(p), n_(ambient), M_(M) {
  if (!is_prime(p)) throw std::invalid_argument("LocalRing: p must be prime");
  if (M < 1) throw std::invalid_argument("LocalRing: M >= 1");
  if (ambient != canonical_conductor(ambient))
    throw std::invalid_argument("LocalRing: ambient must be canonical");
  phi_ = euler_phi(n_);
  pM_ = int_pow(Int(p), M);
  long ps = 1;
  s_ = 0;
  long n0 = n_;
  while (n0 % p == 0) {
    n0 /= p;
    ps *= p;
    ++s_;
  }
  e_ = euler_phi(ps);
  f_ = (n0 == 1) ? 1 : multiplicative_order(p % n0, n0);
  coherent_ = (n0 == 1) || (euler_phi(n0) == f_);
  if (s_ >= 1) {
    varpi_ = CyclotomicNumber::from_int(n_, 1) - CyclotomicNumber::zeta_pow(n_, ps, 1);
  } else {
    varpi_ = CyclotomicNumber::from_int(n_, p);
  }
  CyclotomicNumber varpi_inv = varpi_.inverse();
  varpi_inv_pow_.push_back(CyclotomicNumber::from_int(n_, 1));
  for (long j = 1; j <= chain_length(); ++j)
    varpi_inv_pow_.push_back(varpi_inv_pow_.back() * varpi_inv);
  // residue data: the radical of Phi_n mod p (irreducible in the coherent case)
  FPoly phibar;
  for (const auto& c : cyclotomic_polynomial(n_)) {
    Int r = c % p;
    if (r < 0) r += p;
    phibar.push_back(r.convert_to<long>());
  }
  fp_trim(phibar);
  res_poly_ = fp_radical(phibar, p);
  if (coherent_ && static_cast<long>(res_poly_.size()) - 1 != f_)
    throw std::logic_error("LocalRing: residue polynomial degree mismatch");
  xbar_.resize(phi_);
  FPoly cur{1};
  for (long k = 0; k < phi_; ++k) {
    FPoly red = fp_rem(cur, res_poly_, p);
    red.resize(std::max<size_t>(f_, 1), 0);
    xbar_[k] = red;
    // multiply by x
    cur.insert(cur.begin(), 0);
  }
}

long LocalRing::valuation(const CyclotomicNumber& x) const {
  if (!coherent_) throw std::logic_error("LocalRing::valuation: ring is not local at p");
  if (x.ambient() != n_) throw std::invalid_argument("LocalRing::valuation: wrong ambient");
  if (x.is_zero()) return pi_val_infinity;
  CyclotomicNumber num(x.ambient(), x.numerator(), Int(1));
  long vn = val_p(num.numerator_norm(), p_);
  if (vn % f_ != 0) throw std::logic_error("LocalRing::valuation: norm not divisible by f");
  return vn / f_ - e_ * val_p(x.denominator(), p_);
}

LocalRing::Elt LocalRing::one() const {
  Elt a(phi_, Int(0));
  a[0] = 1;
  return a;
}

LocalRing::Elt LocalRing::reduce(const CyclotomicNumber& x) const {
  if (x.ambient() != n_) throw std::invalid_argument("LocalRing::reduce: wrong ambient");
  Elt a(phi_);
  Int dinv = 1;
  if (x.denominator() != 1) {
    if (x.denominator() % p_ == 0)
      throw std::invalid_argument("LocalRing::reduce: denominator not prime to p");
    dinv = int_mod_inverse(x.denominator() % pM_, pM_);
  }
  for (long i = 0; i < phi_; ++i) {
    Int v = (x.numerator()[i] % pM_) * dinv % pM_;
    if (v < 0) v += pM_;
    a[i] = v;
  }
  return a;
}

bool LocalRing::is_zero(const Elt& a) const {
  return std::all_of(a.begin(), a.end(), [](const Int& c) { return c == 0; });
}

LocalRing::Elt LocalRing::add(const Elt& a, const Elt& b) const {
  Elt r(phi_);
  for (long i = 0; i < phi_; ++i) r[i] = (a[i] + b[i]) % pM_;
  return r;
}

LocalRing::Elt LocalRing::sub(const Elt& a, const Elt& b) const {
  Elt r(phi_);
  for (long i = 0; i < phi_; ++i) {
    r[i] = (a[i] - b[i]) % pM_;
    if (r[i] < 0) r[i] += pM_;
  }
  return r;
}

LocalRing::Elt LocalRing::neg(const Elt& a) const { return sub(zero(), a); }

LocalRing::Elt LocalRing::mul(const Elt& a, const Elt& b) const {
  CyclotomicNumber ca(n_, a, Int(1)), cb(n_, b, Int(1));
  CyclotomicNumber prod = ca * cb;
  Elt r(phi_);
  for (long i = 0; i < phi_; ++i) {
    Int v = prod.numerator()[i] % pM_;
    if (v < 0) v += pM_;
    r[i] = v;
  }
  return r;
}

CyclotomicNumber LocalRing::lift(const Elt& a) const {
  return CyclotomicNumber(n_, a, Int(1));
}

long LocalRing::valuation_mod(const Elt& a) const {
  if (is_zero(a)) return chain_length();
  long v = valuation(lift(a));
  return std::min(v, chain_length());
}

LocalRing::Elt LocalRing::inverse_mod(const Elt& a) const {
  // start from the inverse in F_p[x]/(Phi_n mod p), then Newton-lift
  FPoly abar;
  for (const auto& c : a) {
    Int r = c % p_;
    abar.push_back(r.convert_to<long>());
  }
  fp_trim(abar);
  FPoly phibar;
  for (const auto& c : cyclotomic_polynomial(n_)) {
    Int r = c % p_;
    if (r < 0) r += p_;
    phibar.push_back(r.convert_to<long>());
  }
  FPoly inv0 = fp_inverse_mod(abar, phibar, p_);
  Elt x = zero();
  for (size_t i = 0; i < inv0.size() && static_cast<long>(i) < phi_; ++i) x[i] = inv0[i];
  long prec = 1;
  Elt two = zero();
  two[0] = 2;
  while (prec < M_) {
    // x <- x(2 - a x)
    x = mul(x, sub(two, mul(a, x)));
    prec *= 2;
  }
  return x;
}

LocalRing::Elt LocalRing::divide_varpi(const Elt& a, long j) const {
  if (j == 0) return a;
  if (j < 0 || j > chain_length()) throw std::invalid_argument("divide_varpi: bad exponent");
  if (s_ == 0) {
    Elt r(phi_);
    Int pj = int_pow(Int(p_), j);
    for (long i = 0; i < phi_; ++i) {
      if (a[i] % pj != 0) throw std::domain_error("divide_varpi: not divisible");
      r[i] = a[i] / pj;
    }
    return r;
  }
  CyclotomicNumber q = lift(a) * varpi_inv_pow_[j];
  if (!q.is_integral()) throw std::domain_error("divide_varpi: not divisible");
  Elt r(phi_);
  for (long i = 0; i < phi_; ++i) {
    Int v = q.numerator()[i] % pM_;
    if (v < 0) v += pM_;
    r[i] = v;
  }
  return r;
}

ResidueFieldElt LocalRing::to_residue(const Elt& a) const {
  std::vector<long> acc(std::max<long>(f_, 1), 0);
  for (long k = 0; k < phi_; ++k) {
    long c = static_cast<long>(((a[k] % p_) + p_) % p_);
    if (c == 0) continue;
    for (long i = 0; i < f_; ++i)
      acc[i] = static_cast<long>((acc[i] + static_cast<long long>(c) * xbar_[k][i]) % p_);
  }
  return {acc};
}

bool LocalRing::residue_is_zero(const ResidueFieldElt& a) const {
  return std::all_of(a.c.begin(), a.c.end(), [](long c) { return c == 0; });
}

ResidueFieldElt LocalRing::residue_add(const ResidueFieldElt& a, const ResidueFieldElt& b) const {
  ResidueFieldElt r = residue_zero();
  for (long i = 0; i < f_; ++i) r.c[i] = (a.c[i] + b.c[i]) % p_;
  return r;
}

ResidueFieldElt LocalRing::residue_neg(const ResidueFieldElt& a) const {
  ResidueFieldElt r = residue_zero();
  for (long i = 0; i < f_; ++i) r.c[i] = (p_ - a.c[i]) % p_;
  return r;
}

ResidueFieldElt LocalRing::residue_mul(const ResidueFieldElt& a, const ResidueFieldElt& b) const {
  FPoly pa(a.c.begin(), a.c.end()), pb(b.c.begin(), b.c.end());
  FPoly prod = fp_mul(pa, pb, p_);
  FPoly red = fp_rem(prod, res_poly_, p_);
  ResidueFieldElt r = residue_zero();
  for (size_t i = 0; i < red.size(); ++i) r.c[i] = red[i];
  return r;
}

ResidueFieldElt LocalRing::residue_inv(const ResidueFieldElt& a) const {
  FPoly pa(a.c.begin(), a.c.end());
  FPoly inv = fp_inverse_mod(pa, res_poly_, p_);
  ResidueFieldElt r = residue_zero();
  for (size_t i = 0; i < inv.size(); ++i) r.c[i] = inv[i];
  return r;
}

IdealHnf LocalRing::varpi_power_ideal(long j) const {
  long L = chain_length();
  if (j < 0) throw std::invalid_argument("varpi_power_ideal: j >= 0");
  if (j > L) j = L;
  CyclotomicNumber pMc = CyclotomicNumber::from_int(n_, pM_);
  if (j == 0) return IdealHnf::unit(n_);
  return IdealHnf::from_generators(n_, {varpi_.pow(j), pMc});
}

LocalRing::Elt LocalRing::character_value(const DirichletCharacter& chi, long a) const {
  return reduce(chi.value_in(n_, a));
}

LocalRing local_ring_for(const DirichletCharacter& chi, long p, long M) {
  return LocalRing(p, canonical_conductor(chi.image_order()), M);
}

}  // namespace eiscong
