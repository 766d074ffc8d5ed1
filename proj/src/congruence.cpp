#include "eiscong/congruence.hpp"

#include <algorithm>
#include <sstream>

namespace eiscong {

namespace {

// One tracked combination: lambda over the working ring, its tail values and
// constant term.
struct Comb {
  std::vector<LocalRing::Elt> lambda;
  std::vector<LocalRing::Elt> tails;  // q^1..q^Q values
  LocalRing::Elt constant;
};

bool lambda_is_zero(const LocalRing& R, const Comb& c) {
  for (const auto& e : c.lambda)
    if (!R.is_zero(e)) return false;
  return true;
}

// Chain-ring echelon reduction of a generating set (eliminates on lambda
// coordinates), keeping at most one pivot per coordinate.
void chain_reduce(const LocalRing& R, std::vector<Comb>& gens) {
  size_t B = gens.empty() ? 0 : gens[0].lambda.size();
  std::vector<bool> used(gens.size(), false);
  std::vector<Comb> out;
  for (size_t col = 0; col < B; ++col) {
    long best_v = R.chain_length();
    size_t best_i = gens.size();
    for (size_t i = 0; i < gens.size(); ++i) {
      if (used[i]) continue;
      long v = R.valuation_mod(gens[i].lambda[col]);
      if (v < best_v) {
        best_v = v;
        best_i = i;
      }
    }
    if (best_i == gens.size() || best_v >= R.chain_length()) continue;
    used[best_i] = true;
    Comb piv = gens[best_i];
    // scale so the pivot coordinate is exactly varpi^best_v
    LocalRing::Elt unit = R.divide_varpi(piv.lambda[col], best_v);
    LocalRing::Elt uinv = R.inverse_mod(unit);
    auto times = [&](Comb& c, const LocalRing::Elt& s) {
      for (auto& e : c.lambda) e = R.mul(e, s);
      for (auto& e : c.tails) e = R.mul(e, s);
      c.constant = R.mul(c.constant, s);
    };
    times(piv, uinv);
    for (size_t i = 0; i < gens.size(); ++i) {
      if (used[i] && i != best_i) continue;
      if (i == best_i) continue;
      long v = R.valuation_mod(gens[i].lambda[col]);
      if (v >= R.chain_length()) continue;
      // gens[i] -= (lambda[col] / varpi^best_v) * piv
      LocalRing::Elt q = R.divide_varpi(gens[i].lambda[col], best_v);
      for (size_t j = 0; j < B; ++j)
        gens[i].lambda[j] = R.sub(gens[i].lambda[j], R.mul(q, piv.lambda[j]));
      for (size_t j = 0; j < gens[i].tails.size(); ++j)
        gens[i].tails[j] = R.sub(gens[i].tails[j], R.mul(q, piv.tails[j]));
      gens[i].constant = R.sub(gens[i].constant, R.mul(q, piv.constant));
    }
    out.push_back(std::move(piv));
  }
  gens = std::move(out);
}

}  // namespace

CongruenceResult series_congruence_ideal(const QSeries& f, long p, long M) {
  LocalRing R(p, canonical_conductor(f.ambient()), M);
  if (!R.coherent())
    throw std::domain_error(
        "series_congruence_ideal: coefficient ring is not local at p; no embedding is chosen");
  QSeries g = f.ambient() == R.ambient() ? f : f.promote(R.ambient());
  const long L = R.chain_length();
  long v0 = R.valuation(g.coeff(0));
  if (v0 != 0)
    throw std::invalid_argument("series_congruence_ideal: constant term is not a p-adic unit");
  long best = L;
  long stab = 0;
  for (long n = 1; n <= g.precision(); ++n) {
    if (g.coeff(n).is_zero()) continue;
    long v = R.valuation(g.coeff(n));
    if (v < 0)
      throw std::invalid_argument("series_congruence_ideal: series is not p-integral");
    if (v < best) {
      best = std::min(v, L);
      stab = n;
    }
    if (best == 0) break;
  }
  CongruenceResult res{R.varpi_power_ideal(best), std::max(stab, 1L), "", {}, false, false, best};
  res.trivial_to_precision = (best >= L);
  res.confirmed = !res.trivial_to_precision && res.stabilization_index <= g.precision() / 2;
  res.witness = "series";
  return res;
}

CongruenceResult max_congruence_search(const std::vector<EisensteinBasisElement>& basis, long p,
                                       long M, const IdealHnf* expected) {
  if (basis.empty()) throw std::invalid_argument("max_congruence_search: empty basis");
  long ambient = basis.front().series.ambient();
  long Q = basis.front().series.precision();
  for (const auto& b : basis) {
    if (b.series.ambient() != ambient)
      throw std::invalid_argument("max_congruence_search: inconsistent ambient rings");
    Q = std::min(Q, b.series.precision());
  }
  LocalRing R(p, canonical_conductor(ambient), M);
  if (!R.coherent())
    throw std::domain_error(
        "max_congruence_search: coefficient ring is not local at p; no embedding is chosen");
  const long L = R.chain_length();
  const size_t B = basis.size();

  // initial generators: the basis itself
  std::vector<Comb> gens;
  for (size_t i = 0; i < B; ++i) {
    Comb c;
    c.lambda.assign(B, R.zero());
    c.lambda[i] = R.one();
    c.tails.reserve(Q);
    QSeries s = basis[i].series.ambient() == R.ambient() ? basis[i].series
                                                         : basis[i].series.promote(R.ambient());
    for (long n = 1; n <= Q; ++n) {
      const auto& cf = s.coeff(n);
      if (!cf.is_integral() && cf.denominator() % p == 0)
        throw std::invalid_argument("max_congruence_search: basis series not p-integral");
      c.tails.push_back(R.reduce(cf));
    }
    c.constant = R.reduce(s.coeff(0));
    gens.push_back(std::move(c));
  }

  long best_j = -1;
  Comb best_witness;
  long best_u = 0;
  bool trivial_flag = false;

  LocalRing::Elt varpi_red = R.reduce(R.uniformizer());

  for (long u = 0; u <= L; ++u) {
    // m(u): minimal constant valuation over the current generators; a
    // constant dead to precision cannot be normalized to a unit.
    long m_u = L;
    size_t arg = gens.size();
    for (size_t i = 0; i < gens.size(); ++i) {
      long v = R.valuation_mod(gens[i].constant);
      if (v < m_u) {
        m_u = v;
        arg = i;
      }
    }
    if (arg < gens.size() && u - m_u > best_j) {
      best_j = u - m_u;
      best_witness = gens[arg];
      best_u = u;
    }
    // all tails identically zero mod p^M: deeper levels add nothing new
    bool tails_zero = true;
    for (const auto& g : gens)
      for (const auto& t : g.tails)
        if (!R.is_zero(t)) {
          tails_zero = false;
          break;
        }
    if (tails_zero) {
      if (arg < gens.size() && L - m_u > best_j) {
        best_j = L - m_u;
        best_witness = gens[arg];
        best_u = L;
      }
      if (arg < gens.size()) trivial_flag = true;
      break;
    }
    if (u == L) break;

    // residue rows: tails / varpi^u modulo varpi
    std::vector<std::vector<ResidueFieldElt>> rows(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
      rows[i].reserve(Q);
      for (long n = 0; n < Q; ++n)
        rows[i].push_back(R.to_residue(R.divide_varpi(gens[i].tails[n], u)));
    }
    // kernel over the residue field: mu with sum mu_i rows[i] = 0
    // Gaussian elimination over F_{p^f}
    size_t G = gens.size();
    std::vector<std::vector<ResidueFieldElt>> mat = rows;  // G x Q
    std::vector<std::vector<ResidueFieldElt>> id(G);
    for (size_t i = 0; i < G; ++i) {
      id[i].assign(G, R.residue_zero());
      id[i][i].c[0] = 1;
    }
    size_t rank_row = 0;
    for (long col = 0; col < Q && rank_row < G; ++col) {
      size_t piv = G;
      for (size_t i = rank_row; i < G; ++i)
        if (!R.residue_is_zero(mat[i][col])) {
          piv = i;
          break;
        }
      if (piv == G) continue;
      std::swap(mat[rank_row], mat[piv]);
      std::swap(id[rank_row], id[piv]);
      ResidueFieldElt inv = R.residue_inv(mat[rank_row][col]);
      for (size_t i = rank_row + 1; i < G; ++i) {
        if (R.residue_is_zero(mat[i][col])) continue;
        ResidueFieldElt fac = R.residue_mul(mat[i][col], inv);
        for (long c2 = col; c2 < Q; ++c2)
          mat[i][c2] =
              R.residue_add(mat[i][c2], R.residue_neg(R.residue_mul(fac, mat[rank_row][c2])));
        for (size_t c2 = 0; c2 < G; ++c2)
          id[i][c2] = R.residue_add(id[i][c2], R.residue_neg(R.residue_mul(fac, id[rank_row][c2])));
      }
      ++rank_row;
    }
    // kernel rows: mat rows rank_row..G-1 are zero; their id parts are mu's
    std::vector<Comb> next;
    for (size_t i = rank_row; i < G; ++i) {
      Comb c;
      c.lambda.assign(B, R.zero());
      c.tails.assign(Q, R.zero());
      c.constant = R.zero();
      for (size_t g2 = 0; g2 < G; ++g2) {
        if (R.residue_is_zero(id[i][g2])) continue;
        // lift the residue coefficient to the ring
        LocalRing::Elt lift = R.zero();
        for (size_t d = 0; d < id[i][g2].c.size(); ++d) lift[d] = id[i][g2].c[d];
        for (size_t j = 0; j < B; ++j)
          c.lambda[j] = R.add(c.lambda[j], R.mul(lift, gens[g2].lambda[j]));
        for (long n = 0; n < Q; ++n)
          c.tails[n] = R.add(c.tails[n], R.mul(lift, gens[g2].tails[n]));
        c.constant = R.add(c.constant, R.mul(lift, gens[g2].constant));
      }
      if (!lambda_is_zero(R, c)) next.push_back(std::move(c));
    }
    for (const auto& g : gens) {
      Comb c;
      c.lambda.resize(B);
      c.tails.resize(Q);
      for (size_t j = 0; j < B; ++j) c.lambda[j] = R.mul(varpi_red, g.lambda[j]);
      for (long n = 0; n < Q; ++n) c.tails[n] = R.mul(varpi_red, g.tails[n]);
      c.constant = R.mul(varpi_red, g.constant);
      if (!lambda_is_zero(R, c)) next.push_back(std::move(c));
    }
    gens = std::move(next);
    chain_reduce(R, gens);
    if (gens.empty()) break;
  }

  CongruenceResult res{IdealHnf::unit(R.ambient()), 1, "", {}, false, false, 0};
  if (best_j < 0) {
    // no combination with a finite-valuation constant at any level
    res.trivial_to_precision = true;
    res.ideal = R.varpi_power_ideal(L);
    res.varpi_exponent = L;
    res.witness = "no combination with p-unit constant term to working precision";
    return res;
  }
  long j = std::min(best_j, L);
  res.ideal = R.varpi_power_ideal(j);
  res.varpi_exponent = j;
  res.trivial_to_precision = trivial_flag || j >= L;

  // stabilization index from the witness: first tail position attaining the
  // minimal shifted valuation
  long vc = R.valuation_mod(best_witness.constant);
  res.stabilization_index = Q;
  for (long n = 0; n < Q; ++n) {
    long v = R.valuation_mod(best_witness.tails[n]);
    if (v - vc <= j) {
      res.stabilization_index = n + 1;
      break;
    }
  }
  res.confirmed = !res.trivial_to_precision && res.stabilization_index <= Q / 2;

  // witness description: lambda normalized by its first unit entry
  std::ostringstream w;
  size_t lead = 0;
  for (; lead < B; ++lead)
    if (R.valuation_mod(best_witness.lambda[lead]) == 0) break;
  std::vector<CyclotomicNumber> coeffs;
  if (lead < B) {
    auto inv = R.inverse_mod(best_witness.lambda[lead]);
    for (size_t i = 0; i < B; ++i) coeffs.push_back(R.lift(R.mul(inv, best_witness.lambda[i])));
  } else {
    for (size_t i = 0; i < B; ++i) coeffs.push_back(R.lift(best_witness.lambda[i]));
  }
  w << "varpi^(-" << best_u - j << ") * (";
  for (size_t i = 0; i < B; ++i) {
    if (i) w << " + ";
    w << "(" << coeffs[i].to_string() << ")*" << basis[i].label();
  }
  w << ")";
  res.witness = w.str();
  res.witness_coeffs = std::move(coeffs);
  if (expected && *expected != res.ideal) res.witness += " [differs from expected ideal]";
  return res;
}

AnFactorizationReport verify_an_factorization(long k, const DirichletCharacter& chi, long p,
                                              long Q) {
  AnFactorizationReport rep;
  long ell = chi.conductor();
  long order = chi.image_order();
  bool p_power_order = true;
  long o = order;
  while (o % p == 0) o /= p;
  p_power_order = (o == 1) && order > 1;
  if (!is_prime(ell) || ell == p || !chi.is_primitive() || !p_power_order || k < 1) {
    rep.hypotheses_ok = false;
    return rep;
  }
  rep.hypotheses_ok = true;
  long ambient = chi.value_ambient();
  auto chi_inv = chi.inverse();
  LocalRing R(p, ambient, 2);
  for (long n = 1; n <= Q; ++n) {
    long v = 0;
    long nprime = n;
    while (nprime % ell == 0) {
      nprime /= ell;
      ++v;
    }
    // closed form: (chi^{-1}(n') l^{v(k-1)} - 1) * sum_{d | n'} chi(d) d^{k-1}
    CyclotomicNumber factor =
        chi_inv.value_in(ambient, nprime).scale(Rat(int_pow(Int(ell), v * (k - 1)))) -
        CyclotomicNumber::from_int(ambient, 1);
    CyclotomicNumber closed = factor * sigma_chi(k - 1, chi, nprime);
    // direct: sum_{d | n} (chi^{-1}(n/d) - chi(d)) d^{k-1}
    CyclotomicNumber direct(ambient);
    for (long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      CyclotomicNumber term = chi_inv.value_in(ambient, n / d) - chi.value_in(ambient, d);
      direct = direct + term.scale(Rat(int_pow(Int(d), k - 1)));
    }
    if (closed != direct) {
      rep.closed_form_matches = false;
      rep.mismatches.push_back(n);
    }
    if (!closed.is_zero() && R.valuation(closed) < 1) {
      rep.all_in_maximal_ideal = false;
      rep.violations.push_back(n);
    }
  }
  return rep;
}

}  // namespace eiscong
