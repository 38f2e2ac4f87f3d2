// Acceptance gate: twelve property-based criteria at desk scale, one
// PASS/FAIL line each. Usage:
//   acceptance [N] [--cli <path-to-cli-binary>]
// With no N, all criteria run. Criterion 12 needs --cli. Exit 0 iff every
// requested criterion passes.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "semidom/semidom.hpp"

#include "oracle.hpp"

using namespace semidom;

namespace {

std::string g_cli_path;

// Tolerances and scales, pinned here.
constexpr int kAxiomTriples = 1000;
constexpr double kAxiomSecondsMax = 10.0;
constexpr int kInjectivityPairs = 500;
constexpr int kUniversalSamples = 500;
constexpr int kGeneratorPowerMax = 10;  // pi(2^k) unit for k <= 10
constexpr int kSaturationFractions = 500;
constexpr int kRoundtripPolys = 1000;
constexpr int kRoundtripDegree = 5;
constexpr long kRoundtripHeight = 20;
constexpr int kHomlawPairs = 500;
constexpr int kBiHfsProducts = 200;
constexpr int kBiHfsAdditiveSamples = 100;
constexpr long kBiHfsConstantMax = 8;
constexpr int kOracleDegree = 3;
constexpr long kOracleHeight = 5;
constexpr double kBiHfsSecondsMax = 120.0;
constexpr int kDescentDepth = 20;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// --- criterion 1: localization semiring axioms -------------------------

Outcome criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(1001);
  for (int t = 0; t < kAxiomTriples; ++t) {
    Instance inst = t % 2 == 0 ? Instance::N0 : Instance::ZPOLYPOS;
    auto S = make_mult_set(inst, {Poly(2)});
    auto sample = [&] {
      Poly num = sample_element(inst, rng, 2, 10).v;
      Poly den = Poly(1L << rng.uniform(0, 3));
      return Fraction{num, den};
    };
    Fraction u = sample(), v = sample(), w = sample();
    auto eq = [&](const Fraction& x, const Fraction& y) {
      return frac_eq(S, x, y);
    };
    bool ok =
        eq(frac_add(S, u, v), frac_add(S, v, u)) &&
        eq(frac_add(S, frac_add(S, u, v), w),
           frac_add(S, u, frac_add(S, v, w))) &&
        eq(frac_mul(S, u, v), frac_mul(S, v, u)) &&
        eq(frac_mul(S, frac_mul(S, u, v), w),
           frac_mul(S, u, frac_mul(S, v, w))) &&
        eq(frac_mul(S, u, frac_add(S, v, w)),
           frac_add(S, frac_mul(S, u, v), frac_mul(S, u, w))) &&
        eq(frac_add(S, u, localize_map(S, Poly::zero())), u) &&
        eq(frac_mul(S, u, localize_map(S, Poly::one())), u);
    if (!ok)
      return {false, "axiom violation at triple " + std::to_string(t) +
                         " (" + to_string(u) + ", " + to_string(v) + ", " +
                         to_string(w) + ")"};
  }
  double dt = seconds_since(t0);
  if (dt >= kAxiomSecondsMax)
    return {false, "runtime " + std::to_string(dt) + "s exceeds bound"};
  return {true, std::to_string(kAxiomTriples) + " triples, " +
                    std::to_string(dt) + "s"};
}

// --- criterion 2: equivalence relation and congruence -------------------

Outcome criterion_2() {
  Rng rng(1002);
  for (int t = 0; t < kAxiomTriples; ++t) {
    Instance inst = t % 2 == 0 ? Instance::N0 : Instance::ZPOLYPOS;
    auto S = make_mult_set(inst, {Poly(2)});
    Poly a = sample_element(inst, rng, 2, 10).v;
    Poly d = Poly(1L << rng.uniform(0, 3));
    Poly s1 = Poly(1L << rng.uniform(0, 3));
    Poly s2 = Poly(1L << rng.uniform(0, 3));
    Fraction u{a, d};
    Fraction u1{a * s1, d * s1};
    Fraction u2{a * s1 * s2, d * s1 * s2};
    Fraction w{sample_element(inst, rng, 2, 10).v, Poly(1L << rng.uniform(0, 3))};
    bool ok = frac_eq(S, u, u) &&                      // reflexive
              frac_eq(S, u, u1) && frac_eq(S, u1, u) &&  // symmetric
              frac_eq(S, u1, u2) && frac_eq(S, u, u2) &&  // transitive
              frac_eq(S, frac_add(S, u, w), frac_add(S, u1, w)) &&
              frac_eq(S, frac_mul(S, u, w), frac_mul(S, u1, w));
    if (!ok) return {false, "violation at triple " + std::to_string(t)};
  }
  return {true, std::to_string(kAxiomTriples) + " triples"};
}

// --- criterion 3: canonical map and universal property ------------------

Outcome criterion_3() {
  Rng rng(1003);
  auto S = make_mult_set(Instance::N0, {Poly(2)});
  for (int t = 0; t < kInjectivityPairs; ++t) {
    Poly a = sample_element(Instance::N0, rng, 0, 1000).v;
    Poly b = sample_element(Instance::N0, rng, 0, 1000).v;
    if (frac_eq(S, localize_map(S, a), localize_map(S, b)) != (a == b))
      return {false, "pi not injective at (" + to_string(a) + ", " +
                         to_string(b) + ")"};
  }
  Poly p = Poly::one();
  for (int k = 0; k <= kGeneratorPowerMax; ++k) {
    if (!frac_eq(S, frac_mul(S, localize_map(S, p), Fraction{Poly::one(), p}),
                 localize_map(S, Poly::one())))
      return {false, "pi(2^" + std::to_string(k) + ") not a unit"};
    p = p * Poly(2);
  }
  InclusionHom theta{Instance::N0, Instance::QGE0};
  for (int t = 0; t < kUniversalSamples; ++t) {
    Poly a = sample_element(Instance::N0, rng, 0, 1000).v;
    if (universal_factor(S, theta, localize_map(S, a)).v != a)
      return {false, "phi(pi(" + to_string(a) + ")) != theta(" +
                         to_string(a) + ")"};
    Poly den = Poly(1L << rng.uniform(0, 6));
    Fraction u{a, den};
    if (universal_factor(S, theta, u).v != *a.div_exact(den))
      return {false, "phi(t/s) != theta(t) theta(s)^-1 at " + to_string(u)};
  }
  return {true,
          std::to_string(kInjectivityPairs) + " injectivity pairs, powers to 2^" +
              std::to_string(kGeneratorPowerMax) + ", " +
              std::to_string(kUniversalSamples) + " universal samples"};
}

// --- criterion 4: saturation isomorphism --------------------------------

Outcome criterion_4() {
  Rng rng(1004);
  auto S4 = make_mult_set(Instance::N0, {Poly(4)});
  auto S2 = make_mult_set(Instance::N0, {Poly(2)});
  if (!saturation_member(S4, Poly(2)).is_yes())
    return {false, "2 not in the saturation of <4>"};
  for (int t = 0; t < kSaturationFractions; ++t) {
    Poly a = sample_element(Instance::N0, rng, 0, 200).v;
    long m = rng.uniform(0, 6);
    Poly d2 = Poly::one(), d4 = Poly::one(), scale = Poly::one();
    for (long k = 0; k < m; ++k) {
      d2 = d2 * Poly(2);
      d4 = d4 * Poly(4);
      scale = scale * Poly(2);
    }
    Fraction u{a, d2};
    Fraction img = make_fraction(S4, scale * a, d4);  // comparison map
    Fraction back = make_fraction(S2, img.num, img.den);  // inverse direction
    if (img.num * u.den != img.den * u.num || !frac_eq(S2, back, u))
      return {false, "comparison maps not mutually inverse at " + to_string(u)};
  }
  return {true, std::to_string(kSaturationFractions) + " fractions"};
}

// --- criteria 5/6: ideal correspondence on curated fixtures -------------

Outcome criterion_5() {
  Budget budget;
  auto fixtures = ideal_fixtures();
  if (fixtures.size() < 10) return {false, "fixture set too small"};
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const auto& fx = fixtures[i];
    std::vector<Poly> igens, sgens;
    for (long g : fx.ideal_gens) igens.push_back(Poly(g));
    for (long g : fx.set_gens) sgens.push_back(Poly(g));
    Verdict v = extension_is_whole(make_ideal(fx.inst, igens),
                                   make_mult_set(fx.inst, sgens), budget);
    if (v.is_unknown())
      return {false, "fixture " + std::to_string(i) + " undecided"};
    if (v.is_yes() != fx.expect_whole)
      return {false, "fixture " + std::to_string(i) +
                         " disagrees with witness existence"};
  }
  auto S2 = make_mult_set(Instance::N0, {Poly(2)});
  Verdict yes = extension_is_whole(make_ideal(Instance::N0, {Poly(2)}), S2,
                                   budget);
  Verdict no = extension_is_whole(make_ideal(Instance::N0, {Poly(3)}), S2,
                                  budget);
  if (!yes.is_yes() || yes.witness.empty())
    return {false, "(2)/<2> Yes case not certified"};
  if (!no.is_no() || no.witness.empty())
    return {false, "(3)/<2> No case not certified"};
  return {true, std::to_string(fixtures.size()) + " fixtures, both anchor "
                "cases certified"};
}

Outcome criterion_6() {
  Budget budget;
  Rng rng(1006);
  for (const auto& fx : ideal_fixtures()) {
    std::vector<Poly> igens, sgens;
    for (long g : fx.ideal_gens) igens.push_back(Poly(g));
    for (long g : fx.set_gens) sgens.push_back(Poly(g));
    auto S = make_mult_set(fx.inst, sgens);
    LocalizedIdeal J = extend_ideal(make_ideal(fx.inst, igens), S);
    for (int t = 0; t < 40; ++t) {
      Poly a = sample_element(fx.inst, rng, 0, 60).v;
      Poly den = Poly::one();
      long e = rng.uniform(0, 3);
      for (long k = 0; k < e; ++k)
        den = den * sgens[static_cast<std::size_t>(
                        rng.uniform(0, static_cast<long>(sgens.size()) - 1))];
      Fraction u{a, den};
      Verdict direct = loc_ideal_membership(J, u, budget);
      Verdict through = extend_of_contract_membership(J, u, budget);
      if ((direct.is_yes() && through.is_no()) ||
          (direct.is_no() && through.is_yes()))
        return {false, "extend(contract(J)) differs from J at " + to_string(u)};
    }
    // prime preservation on the disjoint principal prime fixtures
    if (!fx.expect_whole && fx.ideal_gens.size() == 1 &&
        is_prime_trial(mpz_class(fx.ideal_gens[0]))) {
      ContractedIdeal C = contract_ideal(J);
      for (int t = 0; t < 40; ++t) {
        Fraction a{sample_element(fx.inst, rng, 0, 15).v, Poly::one()};
        Fraction b{sample_element(fx.inst, rng, 0, 15).v, Poly::one()};
        Fraction prod{a.num * b.num, a.den * b.den};
        if (loc_ideal_membership(J, prod, budget).is_yes() &&
            loc_ideal_membership(J, a, budget).is_no() &&
            loc_ideal_membership(J, b, budget).is_no())
          return {false, "extended prime not prime at (" + to_string(a) +
                             ", " + to_string(b) + ")"};
        if (C.member(a.num * b.num, budget).is_yes() &&
            C.member(a.num, budget).is_no() && C.member(b.num, budget).is_no())
          return {false, "contracted prime not prime"};
      }
    }
  }
  return {true, "all curated fixtures, zero counterexamples"};
}

// --- criterion 7: polynomial-localization isomorphism -------------------

Outcome criterion_7() {
  Rng rng(1007);
  auto S = make_mult_set(Instance::N0, {Poly(2)});
  for (int t = 0; t < kRoundtripPolys; ++t) {
    LocPoly f;
    int deg = static_cast<int>(rng.uniform(0, kRoundtripDegree));
    for (int i = 0; i <= deg; ++i)
      f.coeffs.push_back(Fraction{Poly(mpq_class(rng.uniform(0, kRoundtripHeight))),
                                  Poly(1L << rng.uniform(0, 4))});
    if (!lp_eq(S, f, loc_poly_to_poly_loc(S, poly_loc_to_loc_poly(S, f))))
      return {false, "roundtrip failed at sample " + std::to_string(t)};
  }
  for (int t = 0; t < kHomlawPairs; ++t) {
    auto sample_frac = [&] {
      std::vector<mpq_class> c(static_cast<std::size_t>(rng.uniform(1, 4)));
      for (auto& x : c) x = rng.uniform(0, 10);
      return Fraction{Poly(std::move(c)), Poly(1L << rng.uniform(0, 2))};
    };
    Fraction u = sample_frac(), v = sample_frac();
    Fraction sum{u.num * v.den + u.den * v.num, u.den * v.den};
    Fraction prod{u.num * v.num, u.den * v.den};
    LocPoly pu = loc_poly_to_poly_loc(S, u);
    LocPoly pv = loc_poly_to_poly_loc(S, v);
    if (!lp_eq(S, loc_poly_to_poly_loc(S, sum), lp_add(S, pu, pv)) ||
        !lp_eq(S, loc_poly_to_poly_loc(S, prod), lp_mul(S, pu, pv)))
      return {false, "homomorphism law failed at pair " + std::to_string(t)};
  }
  return {true, std::to_string(kRoundtripPolys) + " roundtrips, " +
                    std::to_string(kHomlawPairs) + " pairs"};
}

// --- criterion 8: bi-HFS instance ---------------------------------------

Outcome criterion_8() {
  auto t0 = std::chrono::steady_clock::now();
  Budget budget;
  budget.height_cap = 4000;
  Rng rng(1008);
  // (a) products of certified atoms
  static const char* kAtoms[] = {"2", "3", "5", "1+x", "2-x", "1+2x", "3+2x"};
  for (int t = 0; t < kBiHfsProducts; ++t) {
    int k = static_cast<int>(rng.uniform(1, 4));
    Poly prod = Poly::one();
    std::size_t used = 0;
    int degsum = 0;
    for (int j = 0; j < k; ++j) {
      Poly a = parse_poly(kAtoms[rng.next() % 7]);
      if (degsum + a.degree() > 4) continue;
      degsum += a.degree();
      prod = prod * a;
      ++used;
    }
    if (used == 0) continue;
    auto zs = factorizations(Element{Instance::ZPOLYPOS, prod}, budget);
    if (!zs.complete || zs.all.size() != 1)
      return {false, "Z(b) not a certified singleton for " + to_string(prod)};
    if (zs.all[0].length() != used || zs.all[0].recompose() != prod)
      return {false, "L != {k} for " + to_string(prod)};
  }
  // (b) additive length law
  for (int t = 0; t < kBiHfsAdditiveSamples; ++t) {
    Element g = sample_element(Instance::ZPOLYPOS, rng, 2, 6, false);
    std::vector<mpq_class> c(g.v.coeffs());
    c.resize(std::max<std::size_t>(c.size(), 1));
    c[0] = rng.uniform(1, kBiHfsConstantMax);
    g.v = Poly(std::move(c));
    long m = mpz_get_si(g.v.constant_term().get_num().get_mpz_t());
    auto zs = additive_factorizations(g, budget);
    if (zs.all.empty())
      return {false, "no additive factorization enumerated for " +
                         to_string(g.v)};
    for (const auto& z : zs.all) {
      if (static_cast<long>(z.length()) != m || z.recompose() != g.v)
        return {false, "additive length law violated at " + to_string(g.v)};
    }
  }
  // oracle equivalence on the full degree <= 3, height <= 5 box
  long checked = 0;
  for (int deg = 0; deg <= kOracleDegree; ++deg) {
    std::vector<long> idx(deg + 1, -kOracleHeight);
    idx[0] = 1;  // constant term positive
    bool done = false;
    while (!done) {
      if (deg == 0 || idx[deg] != 0) {
        std::vector<mpq_class> c(idx.begin(), idx.end());
        Poly f(std::move(c));
        if (f.degree() == deg) {
          auto zs = factorizations(Element{Instance::ZPOLYPOS, f}, budget);
          if (!zs.complete || zs.all.size() != 1)
            return {false, "engine incomplete on " + to_string(f)};
          auto ref = oracle::factor_poly(f, 40);
          // normalize oracle atoms to the positive-constant-term convention
          std::vector<Poly> expect;
          for (Poly q : ref.irreducibles) {
            if (q.constant_term() < 0) q = -q;
            expect.push_back(q);
          }
          std::sort(expect.begin(), expect.end());
          if (zs.all[0].atoms != expect)
            return {false, "oracle mismatch on " + to_string(f)};
          ++checked;
        }
      }
      int i = 0;
      while (i <= deg && ++idx[i] > kOracleHeight) {
        idx[i] = i == 0 ? 1 : -kOracleHeight;
        ++i;
      }
      if (i > deg) done = true;
    }
  }
  double dt = seconds_since(t0);
  if (dt >= kBiHfsSecondsMax)
    return {false, "runtime " + std::to_string(dt) + "s exceeds bound"};
  return {true, std::to_string(kBiHfsProducts) + " products, " +
                    std::to_string(kBiHfsAdditiveSamples) +
                    " additive samples, " + std::to_string(checked) +
                    " oracle comparisons, " + std::to_string(dt) + "s"};
}

// --- criterion 9: counterexamples reproduced ----------------------------

Outcome criterion_9() {
  Verdict sub = check_subtractive(make_ideal(Instance::N0, {Poly(2), Poly(3)}));
  if (!sub.is_no() || sub.witness.find("s=1") == std::string::npos ||
      sub.witness.find("i=2") == std::string::npos)
    return {false, "subtractivity witness (s=1, i=2) not reproduced: " +
                       sub.witness};
  auto chain = non_atomic_witness(kDescentDepth);
  if (chain.size() != kDescentDepth + 1)
    return {false, "descent chain has wrong length"};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i] != Poly(2) * chain[i + 1])
      return {false, "descent step " + std::to_string(i) + " broken"};
    if (is_mult_unit(Instance::ZXQ, chain[i + 1]))
      return {false, "prefix divisor at depth " + std::to_string(i + 1) +
                         " is a unit"};
  }
  auto zs = factorizations(Element{Instance::ZXQ, parse_poly("x")});
  if (!zs.all.empty() || zs.descent_witness.empty())
    return {false, "x wrongly admits an atomic factorization"};
  return {true, "subtractivity witness and depth-" +
                    std::to_string(kDescentDepth) + " descent verified"};
}

// --- criterion 10: prime transfer evidence ------------------------------

Outcome criterion_10() {
  Budget budget;
  auto S = make_mult_set(Instance::N0, {Poly(2)});
  for (long p : {3L, 5L, 7L, 11L}) {
    Verdict v = prime_transfer_check(Element{Instance::N0, Poly(p)}, S, budget);
    if (!v.is_yes())
      return {false, "refutation found for p=" + std::to_string(p) + ": " +
                         v.witness};
  }
  if (!frac_eq(S, frac_mul(S, localize_map(S, Poly(2)),
                           Fraction{Poly::one(), Poly(2)}),
               localize_map(S, Poly::one())))
    return {false, "2/1 not verified a unit"};
  return {true, "p in {3,5,7,11}, zero refutations; 2/1 unit verified"};
}

// --- criterion 11: prime lift and additive reduction --------------------

Outcome criterion_11() {
  Budget tiny;
  tiny.degree_cap = 3;
  tiny.height_cap = 6;
  for (long p : {2L, 3L}) {
    Verdict v =
        prime_lift_check(Instance::N0, Element{Instance::N0, Poly(p)}, tiny);
    if (!v.is_yes())
      return {false, "lift refuted for p=" + std::to_string(p) + ": " +
                         v.witness};
  }
  if (!is_additively_reduced(Instance::N0).is_yes() ||
      !is_additively_reduced(Instance::QGE0).is_yes() ||
      !is_additively_reduced(Instance::ZPOLYPOS).is_yes() ||
      !is_additively_reduced(Instance::Z).is_no())
    return {false, "additively-reduced table wrong"};
  return {true, "p in {2,3} exhaustive at degree <= 3, height <= 6"};
}

// --- criterion 12: determinism of the CLI check suites ------------------

std::string run_capture(const std::string& cmd, int& exit_code) {
  std::string out;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  exit_code = pclose(pipe);
  return out;
}

Outcome criterion_12() {
  if (g_cli_path.empty())
    return {false, "no --cli <path> given; cannot exercise the binary"};
  for (const char* suite : {"bi-hfs", "localization-axioms", "non-atomic"}) {
    std::string base = g_cli_path + " check --suite " + suite +
                       " --seed 42 --samples 64 --json";
    int e1 = 0, e2 = 0, e3 = 0;
    std::string a = run_capture(base, e1);
    std::string b = run_capture(base, e2);
    std::string c = run_capture(base + " --workers 4", e3);
    if (e1 != 0 || e2 != 0 || e3 != 0)
      return {false, std::string("suite ") + suite + " exited nonzero"};
    if (a != b) return {false, std::string("suite ") + suite +
                                   " differs across identical runs"};
    if (a != c) return {false, std::string("suite ") + suite +
                                   " differs across worker counts"};
  }
  return {true, "byte-identical across runs and 1-vs-4 workers"};
}

const std::array<std::pair<const char*, std::function<Outcome()>>, 12>
    kCriteria = {{
        {"localization semiring axioms (1000 triples, < 10 s)", criterion_1},
        {"fraction equivalence and congruence (1000 triples)", criterion_2},
        {"canonical map: injectivity, units, universal property",
         criterion_3},
        {"saturation comparison maps mutually inverse (500 fractions)",
         criterion_4},
        {"extension_is_whole matches witness existence on fixtures",
         criterion_5},
        {"extend-contract identity and prime preservation on fixtures",
         criterion_6},
        {"polynomial-localization roundtrip and homomorphism laws",
         criterion_7},
        {"bi-HFS: singleton Z(b), additive length law, oracle equivalence "
         "(< 2 min)",
         criterion_8},
        {"counterexamples: subtractivity witness and depth-20 descent",
         criterion_9},
        {"prime transfer evidence for p in {3,5,7,11}", criterion_10},
        {"prime lift exhaustive and additively-reduced table", criterion_11},
        {"CLI determinism across runs and worker counts", criterion_12},
    }};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) {
      g_cli_path = argv[++i];
    } else {
      only = std::atoi(arg.c_str());
      if (only < 1 || only > 12) {
        std::cerr << "usage: acceptance [1..12] [--cli <path>]\n";
        return 2;
      }
    }
  }
  bool all_pass = true;
  for (int n = 1; n <= 12; ++n) {
    if (only != 0 && n != only) continue;
    Outcome o = kCriteria[n - 1].second();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": "
              << kCriteria[n - 1].first << " — " << o.detail << "\n";
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
