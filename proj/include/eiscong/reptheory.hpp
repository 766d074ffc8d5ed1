#pragma once

#include "eiscong/ideal.hpp"
#include "eiscong/localring.hpp"

#include <string>

namespace eiscong {

enum class CongruenceCase { I, II, III, IV, V, VI, VII };
std::string case_name(CongruenceCase c);

/// Deterministic topological generators of Z_p^x x (Z/N')^x: the smallest
/// primitive root mod p^2 for odd p (g = 5 and -1 adjoined at p = 2), plus
/// the canonical generators of (Z/N')^x.
struct ProfiniteGeneratorSet {
  long p = 2;
  long g = 5;
  std::vector<long> torsion_generators;  // {-1} at p = 2, empty otherwise
  long tame_level = 1;
  std::vector<std::pair<long, long>> tame_generators;
};

ProfiniteGeneratorSet make_generator_set(long p, long tame_level);

/// Finite-level check that the generator set generates (Z/p^m N')^x.
bool generator_set_generates(const ProfiniteGeneratorSet& gs, long m);

struct CongruencePrediction {
  CongruenceCase tag = CongruenceCase::I;
  long p = 0, v = 0, vprime = 0, a = 0, k = 0;
  long chi_order = 1, chi_p_order = 1, chi_prime_order = 1;
  bool coherent = true;  // Z[chi] (x) Z_p local; closed form is unambiguous
  bool congruent_branch = false;  // the (p-1) | (k+a) style branch fired
  std::string branch;
  IdealHnf ideal{1};
};

/// Closed-form maximal congruence of the representation attached to
/// (a, b) -> chi_p(a) chi'(b) a^k, by the seven-case theorem. On a value ring
/// that is not local at p the exact ideal is emitted in generator form
/// (identical to the oracle) and flagged non-coherent.
CongruencePrediction predict_max_congruence(long k, const DirichletCharacter& chi, long p,
                                            long M = 12);

/// Independent oracle: the ideal generated by
/// {1 - chi_p(a) chi'(b) a^k : (a,b) over the generator set} together with
/// p^M, in Z[zeta_n] for n the image order of chi.
IdealHnf oracle_max_congruence(long k, const DirichletCharacter& chi, long p, long M);

}  // namespace eiscong
