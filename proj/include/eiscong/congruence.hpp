#pragma once

#include "eiscong/localring.hpp"
#include "eiscong/qseries.hpp"

#include <string>

namespace eiscong {

struct CongruenceResult {
  IdealHnf ideal;
  long stabilization_index = 0;  // smallest n0 with a_1..a_{n0} generating the ideal
  std::string witness;
  std::vector<CyclotomicNumber> witness_coeffs;  // combination coefficients per basis element
  bool confirmed = false;                // stabilization_index <= Q/2
  bool trivial_to_precision = false;     // only (p^M) detected
  long varpi_exponent = 0;               // ideal = (varpi^e) + (p^M)
};

/// Maximal congruence ideal of a single series with p-unit constant term:
/// normalize the constant to 1 and return the ideal generated by the tail
/// coefficients together with p^M. Requires a p-coherent coefficient ring.
CongruenceResult series_congruence_ideal(const QSeries& f, long p, long M);

/// Best congruence over lambda-combinations of the basis (valuations shifted
/// by powers of the uniformizer, as in the paper's combination construction):
/// maximizes min_n v(a_n(lambda)) - v(a_0(lambda)) over primitive lambda with
/// finite constant valuation. Reports the witness combination.
CongruenceResult max_congruence_search(const std::vector<EisensteinBasisElement>& basis, long p,
                                       long M,
                                       const IdealHnf* expected = nullptr);

struct AnFactorizationReport {
  bool hypotheses_ok = false;
  bool closed_form_matches = true;
  bool all_in_maximal_ideal = true;
  std::vector<long> mismatches;      // n where closed form != direct sum
  std::vector<long> violations;      // n where a_n is not in the maximal ideal
};

/// Checks, for 1 <= n <= Q, the factorization of the q-coefficients of
/// E_{k,chi^0,chi} + E_{k,chi^{-1},chi^0} for a prime-conductor chi with
/// p-power image: a_n = (chi^{-1}(n') l^{v(k-1)} - 1) sigma_{k-1,chi}(n')
/// against direct summation, and membership of every a_n in the maximal ideal.
AnFactorizationReport verify_an_factorization(long k, const DirichletCharacter& chi, long p,
                                              long Q);

}  // namespace eiscong
