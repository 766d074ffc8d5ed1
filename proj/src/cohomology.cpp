#include "eiscong/cohomology.hpp"

#include <algorithm>

namespace eiscong {

namespace {

// multiplication-by-u matrix on the power basis (row-vector convention)
ZMat mult_matrix(const CyclotomicNumber& u) {
  long n = u.ambient();
  long phi = euler_phi(n);
  ZMat m(phi, std::vector<Int>(phi, Int(0)));
  CyclotomicNumber zeta = CyclotomicNumber::zeta_pow(n, n, 1);
  CyclotomicNumber cur = u;
  for (long i = 0; i < phi; ++i) {
    for (long j = 0; j < phi; ++j) m[i][j] = cur.numerator()[j];
    if (i + 1 < phi) cur = cur * zeta;
  }
  return m;
}

std::vector<CyclotomicNumber> action_units(long k, const DirichletCharacter& chi, long p) {
  auto chiP = chi.is_primitive() ? chi : chi.primitive_part();
  long N = chiP.conductor();
  long rest = N;
  while (rest % p == 0) rest /= p;
  auto [chi_p, chi_prime] = factor_p_part(chiP, p);
  long ambient = chiP.value_ambient();
  auto gs = make_generator_set(p, rest);
  std::vector<CyclotomicNumber> units;
  units.push_back(chi_p.value_in(ambient, gs.g).scale(Rat(int_pow(Int(gs.g), k))));
  if (p == 2) {
    CyclotomicNumber mk = chi_p.value_in(ambient, -1);
    if (k % 2 != 0) mk = -mk;
    units.push_back(mk);
  }
  for (auto [b, ord] : gs.tame_generators) units.push_back(chi_prime.value_in(ambient, b));
  return units;
}

}  // namespace

FiniteQuotientModule build_finite_quotient(long k, const DirichletCharacter& chi, long p,
                                           long m) {
  if (m < 1) throw std::invalid_argument("build_finite_quotient: m >= 1");
  if (k < 1) throw std::invalid_argument("build_finite_quotient: k >= 1");
  auto chiP = chi.is_primitive() ? chi : chi.primitive_part();
  long ambient = chiP.value_ambient();
  LocalRing ring(p, ambient, 1);
  FiniteQuotientModule fq;
  fq.p = p;
  fq.m = m;
  fq.ambient = ambient;
  CyclotomicNumber step =
      ring.wild_exponent() >= 1 ? ring.uniformizer() : CyclotomicNumber::from_int(ambient, p);
  fq.level_lattice = IdealHnf::principal(step.pow(m)).rows();
  for (const auto& u : action_units(k, chiP, p)) fq.actions.push_back(mult_matrix(u));
  return fq;
}

std::vector<Int> fixed_points_finite_level(long k, const DirichletCharacter& chi, long p,
                                           long m) {
  FiniteQuotientModule fq = build_finite_quotient(k, chi, p, m);
  long r = euler_phi(fq.ambient);
  // X = {x : x (A_i - I) in W for all i}
  ZMat X;
  for (long i = 0; i < r; ++i) {
    std::vector<Int> row(r, Int(0));
    row[i] = 1;
    X.push_back(std::move(row));
  }
  for (const auto& a : fq.actions) {
    ZMat am = a;
    for (long i = 0; i < r; ++i) am[i][i] -= 1;
    bool zero = true;
    for (const auto& row : am)
      for (const auto& c : row)
        if (c != 0) zero = false;
    if (zero) continue;  // trivial action contributes no condition
    ZMat pre = preimage_lattice(am, fq.level_lattice, r);
    X = lattice_intersect(X, pre, r);
  }
  return sublattice_invariant_factors(X, fq.level_lattice);
}

H1Result h1_stabilized(long k, const DirichletCharacter& chi, long p, long m_max) {
  if (m_max < 2) throw std::invalid_argument("h1_stabilized: m_max >= 2");
  H1Result res;
  std::vector<std::vector<Int>> history;
  long agree = 0;
  for (long m = 1; m <= m_max; ++m) {
    auto inv = fixed_points_finite_level(k, chi, p, m);
    if (!history.empty() && history.back() == inv)
      ++agree;
    else
      agree = 0;
    history.push_back(inv);
    if (agree >= 2) {  // three consecutive levels agree
      res.stabilized = true;
      res.stabilization_level = m - 2;
      res.invariant_factors = inv;
      break;
    }
  }
  if (!res.stabilized) {
    res.invariant_factors = history.back();
    res.stabilization_level = m_max;
    return res;  // reported, not guessed
  }
  // identify the colimit with Z_p[chi]/I
  auto chiP = chi.is_primitive() ? chi : chi.primitive_part();
  long ambient = chiP.value_ambient();
  LocalRing ring(p, ambient, 1);
  if (!ring.coherent()) {
    res.identified = res.invariant_factors.empty();
    res.ideal = IdealHnf::unit(ambient);
    return res;  // only the unit ideal is identified without an embedding
  }
  Int size = 1;
  for (const auto& f : res.invariant_factors) size *= f;
  long t = 0;
  Int s = size;
  while (s % p == 0) {
    s /= p;
    ++t;
  }
  if (s != 1 || t % ring.residue_degree() != 0) {
    res.identified = false;
    return res;
  }
  long j = t / ring.residue_degree();
  CyclotomicNumber step =
      ring.wild_exponent() >= 1 ? ring.uniformizer() : CyclotomicNumber::from_int(ambient, p);
  res.ideal = j == 0 ? IdealHnf::unit(ambient) : IdealHnf::principal(step.pow(j));
  res.identified = true;
  return res;
}

Int wild_cokernel_size(long k, const DirichletCharacter& chi, long p, long m) {
  FiniteQuotientModule fq = build_finite_quotient(k, chi, p, m);
  long r = euler_phi(fq.ambient);
  ZMat am = fq.actions.front();
  for (long i = 0; i < r; ++i) am[i][i] -= 1;
  // coker on Z^r / W: Z^r / (rowspan(am) + W)
  ZMat span = am;
  for (const auto& w : fq.level_lattice) span.push_back(w);
  auto inv = quotient_invariant_factors(span, r);
  Int size = 1;
  for (const auto& f : inv) {
    if (f == 0) return Int(0);  // infinite (should not happen here)
    size *= f;
  }
  return size;
}

}  // namespace eiscong
