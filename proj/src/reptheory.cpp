#include "eiscong/reptheory.hpp"

#include <numeric>
#include <set>

namespace eiscong {

std::string case_name(CongruenceCase c) {
  switch (c) {
    case CongruenceCase::I: return "I";
    case CongruenceCase::II: return "II";
    case CongruenceCase::III: return "III";
    case CongruenceCase::IV: return "IV";
    case CongruenceCase::V: return "V";
    case CongruenceCase::VI: return "VI";
    case CongruenceCase::VII: return "VII";
  }
  return "?";
}

ProfiniteGeneratorSet make_generator_set(long p, long tame_level) {
  ProfiniteGeneratorSet gs;
  gs.p = p;
  gs.tame_level = tame_level;
  if (p == 2) {
    gs.g = 5;
    gs.torsion_generators = {-1};
  } else {
    gs.g = smallest_primitive_root(p * p);
    // a primitive root mod p^2 generates (Z/p^v)^x for every v >= 1, hence
    // topologically generates Z_p^x
  }
  gs.tame_generators = unit_group_generators(tame_level).generators;
  return gs;
}

bool generator_set_generates(const ProfiniteGeneratorSet& gs, long m) {
  long pm = 1;
  for (long i = 0; i < m; ++i) pm *= gs.p;
  long mod = pm * gs.tame_level;
  std::set<long> seen;
  std::vector<long> frontier{1 % mod};
  seen.insert(1 % mod);
  std::vector<long> gens;
  gens.push_back(((gs.g % mod) + mod) % mod);
  for (long t : gs.torsion_generators) gens.push_back(((t % mod) + mod) % mod);
  for (auto [b, ord] : gs.tame_generators) {
    // CRT-lift the tame generator to be 1 mod p^m
    for (long x = b % mod; ; x += gs.tame_level) {
      long xm = ((x % mod) + mod) % mod;
      if (xm % pm == 1 % pm && std::gcd(xm, mod) == 1) {
        gens.push_back(xm);
        break;
      }
      if (x > mod + gs.tame_level) throw std::logic_error("no tame lift");
    }
  }
  while (!frontier.empty()) {
    long x = frontier.back();
    frontier.pop_back();
    for (long g : gens) {
      long y = static_cast<long>((static_cast<long long>(x) * g) % mod);
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return static_cast<long>(seen.size()) == euler_phi(mod);
}

namespace {

struct Dispatch {
  CongruenceCase tag;
  long v, vprime, a;
  long chi_p_order, chi_prime_order;
  bool coherent_torsion;  // torsion part of chi_p has order <= 2
};

Dispatch dispatch_case(const DirichletCharacter& chi, long p) {
  long N = chi.conductor();
  long v = 0;
  long rest = N;
  while (rest % p == 0) {
    rest /= p;
    ++v;
  }
  auto [chi_p, chi_prime] = factor_p_part(chi.is_primitive() ? chi : chi.primitive_part(), p);
  Dispatch d{};
  d.v = v;
  d.chi_p_order = chi_p.image_order();
  d.chi_prime_order = chi_prime.image_order();
  long tprime = d.chi_prime_order;
  while (tprime % p == 0) tprime /= p;
  d.vprime = 0;
  {
    long o = d.chi_prime_order;
    while (o % p == 0) {
      o /= p;
      ++d.vprime;
    }
  }
  if (rest == 1) {
    if (p > 2)
      d.tag = (v <= 1) ? CongruenceCase::I : CongruenceCase::III;
    else
      d.tag = (v <= 2) ? CongruenceCase::II : CongruenceCase::IV;
  } else if (tprime > 1) {
    d.tag = CongruenceCase::V;
  } else {
    d.tag = (p > 2) ? CongruenceCase::VI : CongruenceCase::VII;
  }
  // Teichmuller exponent of the torsion part of chi_p
  d.a = 0;
  d.coherent_torsion = true;
  if (p == 2) {
    auto e = chi_p.value_exponent(-1);
    d.a = (e && *e != 0) ? 1 : 0;
  } else if (v >= 1) {
    // torsion generator of (Z/p^v)^x: gamma^{p^{v-1}} for a generator gamma
    long pv = 1;
    for (long i = 0; i < v; ++i) pv *= p;
    long gamma = unit_group_generators(pv).generators.at(0).first;
    long t0 = pow_mod(Int(gamma), int_pow(Int(p), v - 1), Int(pv)).convert_to<long>();
    auto e = chi_p.value_exponent(t0);
    if (!e) throw std::logic_error("dispatch_case: torsion generator not a unit");
    long ord = d.chi_p_order / std::gcd(d.chi_p_order, *e);
    if (*e == 0)
      d.a = 0;
    else if (ord == 2)
      d.a = (p - 1) / 2;
    else
      d.coherent_torsion = false;  // exponent depends on a choice of embedding
  }
  return d;
}

}  // namespace

IdealHnf oracle_max_congruence(long k, const DirichletCharacter& chi, long p, long M) {
  if (k < 1) throw std::invalid_argument("oracle_max_congruence: k >= 1");
  if (!is_prime(p)) throw std::invalid_argument("oracle_max_congruence: p prime");
  auto chiP = chi.is_primitive() ? chi : chi.primitive_part();
  long N = chiP.conductor();
  long rest = N;
  while (rest % p == 0) rest /= p;
  auto [chi_p, chi_prime] = factor_p_part(chiP, p);
  long ambient = chiP.value_ambient();
  auto gs = make_generator_set(p, rest);
  std::vector<CyclotomicNumber> gens;
  CyclotomicNumber one = CyclotomicNumber::from_int(ambient, 1);
  // wild generator: 1 - chi_p(g) g^k
  gens.push_back(one - chi_p.value_in(ambient, gs.g).scale(Rat(int_pow(Int(gs.g), k))));
  if (p == 2) {
    CyclotomicNumber mk = chi_p.value_in(ambient, -1);
    if (k % 2 != 0) mk = -mk;
    gens.push_back(one - mk);
  }
  for (auto [b, ord] : gs.tame_generators) gens.push_back(one - chi_prime.value_in(ambient, b));
  gens.push_back(CyclotomicNumber::from_int(ambient, int_pow(Int(p), M)));
  return IdealHnf::from_generators(ambient, gens);
}

CongruencePrediction predict_max_congruence(long k, const DirichletCharacter& chi, long p,
                                            long M) {
  if (k < 1) throw std::invalid_argument("predict_max_congruence: k >= 1");
  if (!is_prime(p)) throw std::invalid_argument("predict_max_congruence: p prime");
  auto chiP = chi.is_primitive() ? chi : chi.primitive_part();
  Dispatch d = dispatch_case(chiP, p);
  long ambient = chiP.value_ambient();
  LocalRing ring(p, ambient, M);

  CongruencePrediction pred;
  pred.tag = d.tag;
  pred.p = p;
  pred.v = d.v;
  pred.vprime = d.vprime;
  pred.a = d.a;
  pred.k = k;
  pred.chi_order = chiP.image_order();
  pred.chi_p_order = d.chi_p_order;
  pred.chi_prime_order = d.chi_prime_order;
  pred.coherent = ring.coherent() && d.coherent_torsion;
  pred.ideal = IdealHnf::unit(ambient);

  if (!pred.coherent) {
    // The value ring splits p-adically; the per-embedding closed form is not
    // a single global ideal. Emit the exact generator-form ideal instead.
    pred.branch = "generator form (value ring not local at p)";
    pred.ideal = oracle_max_congruence(k, chiP, p, M);
    return pred;
  }

  auto vp_of = [&](long x) {
    long r = 0;
    while (x % p == 0) {
      x /= p;
      ++r;
    }
    return r;
  };
  CyclotomicNumber one = CyclotomicNumber::from_int(ambient, 1);
  switch (d.tag) {
    case CongruenceCase::I: {
      if ((k + d.a) % (p - 1) == 0) {
        pred.congruent_branch = true;
        pred.ideal = IdealHnf::principal(
            CyclotomicNumber::from_int(ambient, int_pow(Int(p), vp_of(k) + 1)));
        pred.branch = "(p^(v_p(k)+1))";
      } else {
        pred.branch = "(1)";
      }
      break;
    }
    case CongruenceCase::II: {
      if ((k + d.a) % 2 == 0) {
        pred.congruent_branch = true;
        pred.ideal = IdealHnf::principal(
            CyclotomicNumber::from_int(ambient, int_pow(Int(2), vp_of(k) + 2)));
        pred.branch = "(2^(v_2(k)+2))";
      } else {
        pred.ideal = IdealHnf::principal(CyclotomicNumber::from_int(ambient, 2));
        pred.branch = "(2)";
      }
      break;
    }
    case CongruenceCase::III: {
      long ps = 1;
      for (long i = 0; i < d.v - 1; ++i) ps *= p;
      if ((k + d.a) % (p - 1) == 0) {
        pred.congruent_branch = true;
        pred.ideal = IdealHnf::principal(one - CyclotomicNumber::zeta_pow(ambient, ps, 1));
        pred.branch = "(1 - zeta_{p^(v-1)})";
      } else {
        pred.branch = "(1)";
      }
      break;
    }
    case CongruenceCase::IV: {
      long ps = 1;
      for (long i = 0; i < d.v - 2; ++i) ps *= 2;
      pred.congruent_branch = true;
      pred.ideal = IdealHnf::principal(one - CyclotomicNumber::zeta_pow(ambient, ps, 1));
      pred.branch = "(1 - zeta_{2^(v-2)}) for all k";
      break;
    }
    case CongruenceCase::V: {
      pred.branch = "(1)";
      break;
    }
    case CongruenceCase::VI: {
      long e = std::max(d.v - 1, d.vprime);
      long ps = 1;
      for (long i = 0; i < e; ++i) ps *= p;
      if ((k + d.a) % (p - 1) == 0) {
        pred.congruent_branch = true;
        pred.ideal = IdealHnf::principal(one - CyclotomicNumber::zeta_pow(ambient, ps, 1));
        pred.branch = "(1 - zeta_{p^max(v-1,v')})";
      } else {
        pred.branch = "(1)";
      }
      break;
    }
    case CongruenceCase::VII: {
      long e = std::max(d.v - 2, d.vprime);
      if (e < 1) e = 1;
      long ps = 1;
      for (long i = 0; i < e; ++i) ps *= 2;
      pred.congruent_branch = true;
      pred.ideal = IdealHnf::principal(one - CyclotomicNumber::zeta_pow(ambient, ps, 1));
      pred.branch = "(1 - zeta_{2^max(v',v-2)}) for all k";
      break;
    }
  }
  return pred;
}

}  // namespace eiscong
