#include "eiscong/qseries.hpp"

#include "eiscong/ideal.hpp"
#include "eiscong/localring.hpp"

#include <sstream>

namespace eiscong {

void QSeries::set_coeff(long i, CyclotomicNumber c) {
  if (c.ambient() != n_) throw std::invalid_argument("QSeries::set_coeff: wrong ambient");
  coeffs_.at(i) = std::move(c);
}

QSeries QSeries::operator+(const QSeries& o) const {
  if (n_ != o.n_) throw std::invalid_argument("QSeries +: mixed ambient rings");
  long Q = std::min(precision(), o.precision());
  QSeries r(n_, Q);
  for (long i = 0; i <= Q; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
  if (n_ != o.n_) throw std::invalid_argument("QSeries -: mixed ambient rings");
  long Q = std::min(precision(), o.precision());
  QSeries r(n_, Q);
  for (long i = 0; i <= Q; ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
  if (n_ != o.n_) throw std::invalid_argument("QSeries *: mixed ambient rings");
  long Q = std::min(precision(), o.precision());
  QSeries r(n_, Q);
  for (long i = 0; i <= Q; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (long j = 0; i + j <= Q; ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
    }
  }
  return r;
}

QSeries QSeries::scale(const CyclotomicNumber& c) const {
  QSeries r(n_, precision());
  for (long i = 0; i <= precision(); ++i) r.coeffs_[i] = coeffs_[i] * c;
  return r;
}

QSeries QSeries::scale(const Rat& c) const {
  QSeries r(n_, precision());
  for (long i = 0; i <= precision(); ++i) r.coeffs_[i] = coeffs_[i].scale(c);
  return r;
}

QSeries QSeries::dilate(long t) const {
  if (t < 1) throw std::invalid_argument("QSeries::dilate: t >= 1");
  QSeries r(n_, precision());
  for (long i = 0; i * t <= precision(); ++i) r.coeffs_[i * t] = coeffs_[i];
  return r;
}

QSeries QSeries::truncate(long Q) const {
  QSeries r(n_, Q);
  for (long i = 0; i <= Q && i <= precision(); ++i) r.coeffs_[i] = coeffs_[i];
  return r;
}

QSeries QSeries::promote(long ambient) const {
  QSeries r(ambient, precision());
  for (long i = 0; i <= precision(); ++i) r.set_coeff(i, coeffs_[i].promote(ambient));
  return r;
}

CyclotomicNumber sigma_chi(long m, const DirichletCharacter& chi, long n) {
  if (n < 1) throw std::invalid_argument("sigma_chi: n >= 1");
  long ambient = chi.value_ambient();
  CyclotomicNumber s(ambient);
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    if (!chi.value_exponent(d)) continue;
    s = s + chi.value_in(ambient, d).scale(Rat(int_pow(Int(d), m)));
  }
  return s;
}

QSeries eisenstein_qexp(long k, const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                        long t, long Q) {
  if (k < 1) throw std::invalid_argument("eisenstein_qexp: k >= 1");
  if (t < 1 || Q < 1) throw std::invalid_argument("eisenstein_qexp: t, Q >= 1");
  if (chi1.is_trivial() && chi2.is_trivial())
    throw std::invalid_argument(
        "eisenstein_qexp: both characters trivial; use eisenstein_normalized");
  long ambient = canonical_conductor(std::lcm(chi1.image_order(), chi2.image_order()));
  QSeries s(ambient, Q);
  for (long n = 1; n * t <= Q; ++n) {
    CyclotomicNumber c(ambient);
    for (long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      auto e2 = chi2.value_exponent(d);
      auto e1 = chi1.value_exponent(n / d);
      if (!e1 || !e2) continue;
      CyclotomicNumber term = chi2.value_in(ambient, d) * chi1.value_in(ambient, n / d);
      c = c + term.scale(Rat(int_pow(Int(d), k - 1)));
    }
    s.set_coeff(n * t, std::move(c));
  }
  return s;
}

QSeries eisenstein_normalized(long k, const DirichletCharacter& chi, long Q,
                              NormalizationDiagnostics* diag) {
  if (k < 1 || Q < 1) throw std::invalid_argument("eisenstein_normalized: k, Q >= 1");
  bool even_k = (k % 2 == 0);
  if (even_k != chi.is_even())
    throw std::invalid_argument("eisenstein_normalized: parity mismatch");
  auto chiP = chi.is_primitive() ? chi : chi.primitive_part();
  auto B = generalized_bernoulli(k, chiP);
  if (B.value.is_zero()) throw std::invalid_argument("eisenstein_normalized: B_{k,chi} vanishes");
  long ambient = chiP.value_ambient();
  // raw series: -B/(2k) + sum sigma_{k-1,chi}(n) q^n
  QSeries s(ambient, Q);
  s.set_coeff(0, B.value.scale(Rat(Int(-1), Int(2) * k)));
  for (long n = 1; n <= Q; ++n) {
    CyclotomicNumber c(ambient);
    for (long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      auto e = chiP.value_exponent(d);
      if (!e) continue;
      c = c + chiP.value_in(ambient, d).scale(Rat(int_pow(Int(d), k - 1)));
    }
    s.set_coeff(n, std::move(c));
  }
  // clear denominators
  Int D = 1;
  for (long i = 0; i <= Q; ++i) D = lcm(D, s.coeff(i).denominator());
  QSeries cleared = s.scale(Rat(D));
  // rational content
  Int g = 0;
  for (long i = 0; i <= Q && g != 1; ++i)
    for (const auto& c : cleared.coeff(i).numerator()) g = gcd(g, c);
  if (g > 1) cleared = cleared.scale(Rat(Int(1), g));
  NormalizationDiagnostics d;
  d.rational_content_cleared = Rat(D, g == 0 ? Int(1) : g);
  // varpi content for a ramified coherent value ring
  long n_amb = cleared.ambient();
  long wild = 1;
  {
    long m = n_amb;
    for (auto [p, e] : factorize(n_amb)) {
      (void)m;
      long ps = 1;
      for (int i = 0; i < e; ++i) ps *= p;
      if (ps > 2) {
        // candidate ramified prime p: clear (1 - zeta_{p^e})-content
        LocalRing ring(p, n_amb, 1);
        if (!ring.coherent() || ring.wild_exponent() == 0) continue;
        long e0 = pi_val_infinity;
        for (long i = 0; i <= Q && e0 > 0; ++i)
          if (!cleared.coeff(i).is_zero()) e0 = std::min(e0, ring.valuation(cleared.coeff(i)));
        if (e0 > 0 && e0 < pi_val_infinity) {
          CyclotomicNumber w = ring.uniformizer().pow(e0).inverse();
          cleared = cleared.scale(w);
          d.varpi_power_cleared = e0;
          wild = ps;
        }
      }
    }
  }
  (void)wild;
  // leftover non-principal content (informational)
  {
    std::vector<CyclotomicNumber> gens;
    bool all_integral = true;
    for (long i = 0; i <= Q && static_cast<long>(gens.size()) < 48; ++i) {
      if (!cleared.coeff(i).is_integral()) all_integral = false;
      if (!cleared.coeff(i).is_zero() && cleared.coeff(i).is_integral())
        gens.push_back(cleared.coeff(i));
    }
    if (all_integral && !gens.empty()) {
      auto content = IdealHnf::from_generators(n_amb, gens);
      if (!content.is_unit()) d.non_principal_content = true;
    }
  }
  // sign convention: rational constant terms are positive
  if (auto r = cleared.coeff(0).as_rational()) {
    if (*r < 0) cleared = cleared.scale(Rat(-1));
  }
  if (diag) *diag = d;
  return cleared;
}

std::string EisensteinBasisElement::label() const {
  std::ostringstream os;
  os << "E[" << k << "," << chi1.serialize() << "," << chi2.serialize() << ",t=" << t << "]";
  return os.str();
}

std::vector<EisensteinBasisElement> basis_enumeration(long k, long N,
                                                      const DirichletCharacter& chi, long Q) {
  if (N <= 1) throw std::invalid_argument("basis_enumeration: level N > 1 required");
  if (k < 1) throw std::invalid_argument("basis_enumeration: k >= 1");
  bool even_k = (k % 2 == 0);
  if (even_k != chi.is_even())
    throw std::invalid_argument("basis_enumeration: parity mismatch");
  auto target = chi.modulus() == N ? chi : chi.change_modulus(N);
  struct Triple {
    DirichletCharacter c1, c2;
    long t;
  };
  std::vector<Triple> triples;
  long common = target.image_order();
  for (long N1 : divisors_sorted(N)) {
    for (long N2 : divisors_sorted(N)) {
      if (N1 * N2 > N || N % (N1 * N2) != 0) continue;
      for (const auto& c1 : primitive_characters(N1)) {
        for (const auto& c2 : primitive_characters(N2)) {
          // chi2 / chi1 = chi as characters mod N
          auto quot = c2.times(c1.inverse()).change_modulus(N);
          if (!quot.same_values(target)) continue;
          for (long t = 1; N1 * N2 * t <= N; ++t) {
            if (N % (N1 * N2 * t) != 0) continue;
            common = std::lcm(common, std::lcm(c1.image_order(), c2.image_order()));
            triples.push_back({c1, c2, t});
          }
        }
      }
    }
  }
  long ambient = canonical_conductor(common);
  std::vector<EisensteinBasisElement> out;
  out.reserve(triples.size());
  for (auto& tr : triples) {
    QSeries s = (tr.c1.is_trivial() && tr.c1.modulus() == 1)
                    ? eisenstein_normalized(k, tr.c2, Q).dilate(tr.t)
                    : eisenstein_qexp(k, tr.c1, tr.c2, tr.t, Q);
    EisensteinBasisElement el{k, tr.c1, tr.c2, tr.t, s.promote(ambient),
                              k == 2 && tr.c1.is_trivial() && tr.c2.is_trivial()};
    out.push_back(std::move(el));
  }
  return out;
}

std::vector<EisensteinBasisElement> level_one_basis(long k, long Q) {
  auto triv = DirichletCharacter::trivial(1);
  EisensteinBasisElement el{k, triv, triv, 1, eisenstein_normalized(k, triv, Q), k == 2};
  return {el};
}

long default_q_precision(long k) { return std::max(200L, 4 * k); }

}  // namespace eiscong
