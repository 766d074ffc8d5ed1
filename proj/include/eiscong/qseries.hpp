#pragma once

#include "eiscong/bernoulli.hpp"
#include "eiscong/characters.hpp"

namespace eiscong {

/// Truncated q-expansion with exact cyclotomic coefficients, indices 0..Q.
class QSeries {
 public:
  QSeries(long ambient, long precision)
      : n_(ambient), coeffs_(precision + 1, CyclotomicNumber(ambient)) {}

  long ambient() const { return n_; }
  long precision() const { return static_cast<long>(coeffs_.size()) - 1; }
  const CyclotomicNumber& coeff(long i) const { return coeffs_.at(i); }
  void set_coeff(long i, CyclotomicNumber c);

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;  // truncated at min precision
  QSeries scale(const CyclotomicNumber& c) const;
  QSeries scale(const Rat& r) const;
  /// q -> q^t index stretching.
  QSeries dilate(long t) const;
  QSeries truncate(long Q) const;
  QSeries promote(long ambient) const;

  bool operator==(const QSeries& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

 private:
  long n_;
  std::vector<CyclotomicNumber> coeffs_;
};

/// sigma_{m,chi}(n) = sum_{0 < d | n} chi(d) d^m.
CyclotomicNumber sigma_chi(long m, const DirichletCharacter& chi, long n);

/// E_{k,chi1,chi2}(q^t) truncated at Q: coefficient of q^{nt} is
/// sum_{0<d|n} chi2(d) chi1(n/d) d^{k-1}; zero constant term. Both characters
/// trivial is rejected (that series carries the Bernoulli constant; use
/// eisenstein_normalized).
QSeries eisenstein_qexp(long k, const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                        long t, long Q);

struct NormalizationDiagnostics {
  Rat rational_content_cleared = 1;
  long varpi_power_cleared = 0;
  bool non_principal_content = false;
};

/// The pair form E_{k,chi^0,chi} = c0 + c1 sum sigma_{k-1,chi}(n) q^n with
/// c0/c1 = -B_{k,chi}/2k and content cleared; reduces to the classical
/// normalization 1 - (2k/B_k) sum sigma_{k-1}(n) q^n at the trivial character.
QSeries eisenstein_normalized(long k, const DirichletCharacter& chi, long Q,
                              NormalizationDiagnostics* diag = nullptr);

struct EisensteinBasisElement {
  long k = 0;
  DirichletCharacter chi1, chi2;
  long t = 1;
  QSeries series;
  bool quasi_modular = false;  // weight-2 level-1 entry, p-adic only
  std::string label() const;
};

/// All triples (chi1, chi2, t) with chi1, chi2 primitive, (N1 N2 t) | N and
/// chi2/chi1 = chi, per the Eisenstein-subspace basis theorem (N > 1). The
/// (chi^0, chi) entries use eisenstein_normalized.
std::vector<EisensteinBasisElement> basis_enumeration(long k, long N,
                                                      const DirichletCharacter& chi, long Q);

/// The one-element spanning set at level 1: the normalized E_k.
std::vector<EisensteinBasisElement> level_one_basis(long k, long Q);

long default_q_precision(long k);

}  // namespace eiscong
