#ifndef SEMIDOM_SUITES_HPP
#define SEMIDOM_SUITES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "semidom/factor.hpp"
#include "semidom/ideal.hpp"
#include "semidom/instance.hpp"
#include "semidom/localization.hpp"
#include "semidom/polyloc.hpp"
#include "semidom/sampling.hpp"

namespace semidom {

/// Result of one check suite. Failures carry a minimal re-runnable
/// witness invocation. Rendering is deterministic: identical
/// (name, seed, samples, budget) produce identical bytes regardless of
/// worker count.
struct SuiteResult {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * (i + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

/// Runs fn over sample indices with the requested parallelism; results
/// land in index order, so aggregation is order-independent.
inline SuiteResult run_indexed(
    const std::string& name, std::uint64_t seed, std::size_t samples,
    int workers,
    const std::function<std::optional<std::string>(std::size_t, Rng&)>& fn) {
  std::vector<std::optional<std::string>> results(samples);
  auto chunk = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      Rng rng(mix_seed(seed, i));
      results[i] = fn(i, rng);
    }
  };
  if (workers <= 1 || samples < 2) {
    chunk(0, samples);
  } else {
    std::vector<std::thread> pool;
    std::size_t per = (samples + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      std::size_t lo = std::min(samples, w * per);
      std::size_t hi = std::min(samples, lo + per);
      if (lo < hi) pool.emplace_back(chunk, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  SuiteResult res{name, seed, samples, 0, {}};
  for (std::size_t i = 0; i < samples; ++i) {
    if (results[i])
      res.failures.push_back("sample " + std::to_string(i) + ": " +
                             *results[i] + " [rerun: check --suite " + name +
                             " --seed " + std::to_string(seed) +
                             " --samples " + std::to_string(i + 1) + "]");
    else
      ++res.passed;
  }
  return res;
}

inline Fraction sample_fraction(const MultiplicativeSet& S, Rng& rng,
                                int max_degree, long max_height) {
  Poly num = sample_element(S.inst, rng, max_degree, max_height).v;
  Poly den = Poly::one();
  long e = rng.uniform(0, 3);
  for (long k = 0; k < e; ++k)
    den = den * S.gens[static_cast<std::size_t>(
                    rng.uniform(0, static_cast<long>(S.gens.size()) - 1))];
  return Fraction{num, den};
}

}  // namespace detail

/// Semiring axioms on every shipped instance, sampled triples.
inline SuiteResult suite_semiring_axioms(std::uint64_t seed,
                                         std::size_t samples, int workers,
                                         const Budget& budget = {}) {
  (void)budget;
  static const Instance kInstances[] = {Instance::N0,    Instance::Z,
                                        Instance::QGE0,  Instance::ZPOLY,
                                        Instance::ZPOLYPOS, Instance::ZXQ};
  return detail::run_indexed(
      "semiring-axioms", seed, samples, workers,
      [](std::size_t i, Rng& rng) -> std::optional<std::string> {
        Instance inst = kInstances[i % 6];
        Element a = sample_element(inst, rng), b = sample_element(inst, rng),
                c = sample_element(inst, rng);
        auto fail = [&](const std::string& what) {
          return std::optional<std::string>(
              std::string(to_string(inst)) + ": " + what + " on a=" +
              to_string(a.v) + " b=" + to_string(b.v) + " c=" + to_string(c.v));
        };
        if (!membership(inst, a.v + b.v) || !membership(inst, a.v * b.v))
          return fail("closure");
        if (a.v + b.v != b.v + a.v) return fail("additive commutativity");
        if ((a.v + b.v) + c.v != a.v + (b.v + c.v))
          return fail("additive associativity");
        if (a.v * b.v != b.v * a.v) return fail("multiplicative commutativity");
        if ((a.v * b.v) * c.v != a.v * (b.v * c.v))
          return fail("multiplicative associativity");
        if (a.v * (b.v + c.v) != a.v * b.v + a.v * c.v)
          return fail("distributivity");
        if (a.v + Poly::zero() != a.v || a.v * Poly::one() != a.v)
          return fail("identities");
        if (a.v * Poly::zero() != Poly::zero()) return fail("annihilation");
        // cancellation: recover a from a+c and a*c
        if ((a.v + c.v) - c.v != a.v) return fail("additive cancellation");
        if (!c.v.is_zero() && *(a.v * c.v).div_exact(c.v) != a.v)
          return fail("multiplicative cancellation");
        // Grothendieck equivalence: (a,b) ~ (c,d) iff a+d == c+b
        Poly d = b.v;
        Element av{inst, a.v}, bv{inst, b.v};
        if ((groth_embed(av, bv) == groth_embed(Element{inst, c.v}, Element{inst, d})) !=
            (a.v + d == c.v + b.v))
          return fail("Grothendieck equivalence");
        if (inst == Instance::ZPOLYPOS && !a.v.is_zero() &&
            membership(inst, -a.v))
          return fail("additively-reduced violation");
        return std::nullopt;
      });
}

/// Fraction equivalence + semiring laws up to frac_eq on (N0, <2>) and
/// (ZPOLYPOS, <2>); pi injectivity/unit witnesses; universal property
/// into QGE0.
inline SuiteResult suite_localization_axioms(std::uint64_t seed,
                                             std::size_t samples, int workers,
                                             const Budget& budget = {}) {
  (void)budget;
  return detail::run_indexed(
      "localization-axioms", seed, samples, workers,
      [](std::size_t i, Rng& rng) -> std::optional<std::string> {
        Instance inst = i % 2 == 0 ? Instance::N0 : Instance::ZPOLYPOS;
        auto S = make_mult_set(inst, {Poly(2)});
        Fraction u = detail::sample_fraction(S, rng, 2, 10);
        Fraction v = detail::sample_fraction(S, rng, 2, 10);
        Fraction w = detail::sample_fraction(S, rng, 2, 10);
        auto fail = [&](const std::string& what) {
          return std::optional<std::string>(
              std::string(to_string(inst)) + ": " + what + " on u=" +
              to_string(u) + " v=" + to_string(v) + " w=" + to_string(w));
        };
        auto eq = [&](const Fraction& x, const Fraction& y) {
          return frac_eq(S, x, y);
        };
        // equivalence relation, with scaled associates to hit equal pairs
        Poly t = Poly(2);
        Fraction u2{u.num * t, u.den * t};
        if (!eq(u, u)) return fail("reflexivity");
        if (!eq(u, u2) || !eq(u2, u)) return fail("symmetry on associates");
        Fraction u3{u.num * t * t, u.den * t * t};
        if (!(eq(u, u2) && eq(u2, u3) && eq(u, u3))) return fail("transitivity");
        // semiring laws up to frac_eq
        if (!eq(frac_add(S, u, v), frac_add(S, v, u))) return fail("add comm");
        if (!eq(frac_add(S, frac_add(S, u, v), w),
                frac_add(S, u, frac_add(S, v, w))))
          return fail("add assoc");
        if (!eq(frac_mul(S, u, v), frac_mul(S, v, u))) return fail("mul comm");
        if (!eq(frac_mul(S, frac_mul(S, u, v), w),
                frac_mul(S, u, frac_mul(S, v, w))))
          return fail("mul assoc");
        if (!eq(frac_mul(S, u, frac_add(S, v, w)),
                frac_add(S, frac_mul(S, u, v), frac_mul(S, u, w))))
          return fail("distributivity");
        // congruence
        if (!eq(frac_add(S, u2, w), frac_add(S, u, w)) ||
            !eq(frac_mul(S, u2, w), frac_mul(S, u, w)))
          return fail("congruence with frac_eq");
        // pi injectivity on a sampled pair
        Element a = sample_element(inst, rng, 2, 10);
        Element b = sample_element(inst, rng, 2, 10);
        if (frac_eq(S, localize_map(S, a.v), localize_map(S, b.v)) !=
            (a.v == b.v))
          return fail("pi injectivity");
        // pi(s) unit witness for a generator power
        long e = rng.uniform(0, 10);
        Poly p2 = Poly::one();
        for (long k = 0; k < e; ++k) p2 = p2 * Poly(2);
        Fraction unit_check =
            frac_mul(S, localize_map(S, p2), Fraction{Poly::one(), p2});
        if (!frac_eq(S, unit_check, localize_map(S, Poly::one())))
          return fail("pi(s) unit witness");
        // universal property into QGE0 (N0 context only)
        if (inst == Instance::N0) {
          InclusionHom theta{Instance::N0, Instance::QGE0};
          Element phi_u = universal_factor(S, theta, u);
          // phi . pi = theta
          Element lhs = universal_factor(S, theta, localize_map(S, a.v));
          if (lhs.v != a.v) return fail("phi . pi = theta");
          // phi respects the arithmetic
          Element phi_v = universal_factor(S, theta, v);
          Element phi_sum = universal_factor(S, theta, frac_add(S, u, v));
          if (phi_sum.v != phi_u.v + phi_v.v) return fail("phi additivity");
        }
        return std::nullopt;
      });
}

/// Saturation isomorphism on N0: S = <4> against its saturation's subset <2>; the
/// canonical comparison maps are mutually inverse up to frac_eq.
inline SuiteResult suite_saturation_iso(std::uint64_t seed,
                                        std::size_t samples, int workers,
                                        const Budget& budget = {}) {
  return detail::run_indexed(
      "saturation-iso", seed, samples, workers,
      [&budget](std::size_t, Rng& rng) -> std::optional<std::string> {
        auto S4 = make_mult_set(Instance::N0, {Poly(4)});
        auto S2 = make_mult_set(Instance::N0, {Poly(2)});
        // 2 is in the saturation of <4>
        if (!saturation_member(S4, Poly(2), budget).is_yes())
          return "2 not recognized in the saturation of <4>";
        if (saturation_member(S4, Poly(3), budget).answer != Answer::No)
          return "3 wrongly placed in the saturation of <4>";
        // a/2^m in S2-localization maps to (2^m a)/4^m; roundtrip is
        // identity up to frac_eq
        Poly a = sample_element(Instance::N0, rng, 0, 50).v;
        long m = rng.uniform(0, 5);
        Poly d2 = Poly::one(), d4 = Poly::one(), scale = Poly::one();
        for (long k = 0; k < m; ++k) {
          d2 = d2 * Poly(2);
          d4 = d4 * Poly(4);
          scale = scale * Poly(2);
        }
        Fraction in_s2{a, d2};
        Fraction in_s4{scale * a, d4};
        if (in_s2.num * in_s4.den != in_s2.den * in_s4.num)
          return std::optional<std::string>("comparison map not frac_eq at " +
                                            to_string(in_s2));
        // backward: an S4 fraction b/4^k is already an S2 fraction
        Poly b = sample_element(Instance::N0, rng, 0, 50).v;
        long k = rng.uniform(0, 3);
        Poly den4 = Poly::one();
        for (long j = 0; j < k; ++j) den4 = den4 * Poly(4);
        if (!mult_set_contains(S2, den4))
          return std::optional<std::string>("4^k not inside <2>");
        return std::nullopt;
      });
}

/// Curated extension/contraction fixtures over N0 and Z.
struct IdealFixture {
  Instance inst;
  std::vector<long> ideal_gens;
  std::vector<long> set_gens;
  bool expect_whole;  // I meets <S>
};

inline std::vector<IdealFixture> ideal_fixtures() {
  return {
      {Instance::N0, {2}, {2}, true},   {Instance::N0, {3}, {2}, false},
      {Instance::N0, {2, 3}, {5}, true}, {Instance::N0, {4, 6}, {5}, false},
      {Instance::N0, {5}, {3}, false},  {Instance::N0, {6}, {2, 3}, true},
      {Instance::N0, {1}, {7}, true},   {Instance::Z, {3}, {2}, false},
      {Instance::Z, {2}, {2}, true},    {Instance::Z, {6}, {2, 3}, true},
      {Instance::Z, {5}, {2}, false},   {Instance::N0, {7}, {2}, false},
  };
}

inline SuiteResult suite_ideal_correspondence(std::uint64_t seed,
                                              std::size_t samples, int workers,
                                              const Budget& budget = {}) {
  auto fixtures = ideal_fixtures();
  return detail::run_indexed(
      "ideal-correspondence", seed, samples, workers,
      [&](std::size_t i, Rng& rng) -> std::optional<std::string> {
        const auto& fx = fixtures[i % fixtures.size()];
        std::vector<Poly> igens, sgens;
        for (long g : fx.ideal_gens) igens.push_back(Poly(g));
        for (long g : fx.set_gens) sgens.push_back(Poly(g));
        Ideal I = make_ideal(fx.inst, igens);
        auto S = make_mult_set(fx.inst, sgens);
        auto fail = [&](const std::string& what) {
          return std::optional<std::string>("fixture " +
                                            std::to_string(i % fixtures.size()) +
                                            ": " + what);
        };
        // extension is whole iff I meets <S>
        auto whole = extension_is_whole(I, S, budget);
        if (whole.is_unknown()) return fail("extension_is_whole undecided");
        if (whole.is_yes() != fx.expect_whole)
          return fail("extension_is_whole disagrees with fixture");
        // extend(contract(J)) == J on a sampled fraction,
        // J = extension of I
        LocalizedIdeal J = extend_ideal(I, S);
        Fraction u = detail::sample_fraction(S, rng, 0, 40);
        auto direct = loc_ideal_membership(J, u, budget);
        auto through = extend_of_contract_membership(J, u, budget);
        if (direct.is_yes() && !through.is_yes())
          return fail("extend(contract(J)) lost " + to_string(u));
        if (through.is_yes() && direct.is_no())
          return fail("extend(contract(J)) gained " + to_string(u));
        // prime correspondence evidence: prime P=(p) disjoint from S extends to a
        // prime-looking ideal: no product witness among small fractions
        if (!fx.expect_whole && fx.ideal_gens.size() == 1 &&
            is_prime_trial(mpz_class(fx.ideal_gens[0]))) {
          Fraction a = detail::sample_fraction(S, rng, 0, 12);
          Fraction b = detail::sample_fraction(S, rng, 0, 12);
          Fraction prod{a.num * b.num, a.den * b.den};
          if (loc_ideal_membership(J, prod, budget).is_yes() &&
              !loc_ideal_membership(J, a, budget).is_yes() &&
              !loc_ideal_membership(J, b, budget).is_yes())
            return fail("extended prime ideal has a product counterexample: " +
                        to_string(a) + ", " + to_string(b));
          // and the contraction still behaves primely on members
          Poly x = sample_element(fx.inst, rng, 0, 12).v;
          Poly y = sample_element(fx.inst, rng, 0, 12).v;
          ContractedIdeal C = contract_ideal(J);
          if (C.member(x * y, budget).is_yes() &&
              !C.member(x, budget).is_yes() && !C.member(y, budget).is_yes())
            return fail("contracted ideal has a product counterexample");
        }
        return std::nullopt;
      });
}

/// Polynomial-localization roundtrip and homomorphism laws over (N0, <2>).
inline SuiteResult suite_poly_loc_iso(std::uint64_t seed, std::size_t samples,
                                      int workers, const Budget& budget = {}) {
  (void)budget;
  return detail::run_indexed(
      "poly-loc-iso", seed, samples, workers,
      [](std::size_t, Rng& rng) -> std::optional<std::string> {
        auto S = make_mult_set(Instance::N0, {Poly(2)});
        auto sample_locpoly = [&](int maxdeg) {
          LocPoly f;
          int deg = static_cast<int>(rng.uniform(0, maxdeg));
          for (int i = 0; i <= deg; ++i) {
            Poly num = Poly(mpq_class(rng.uniform(0, 20)));
            Poly den = Poly::one();
            long e = rng.uniform(0, 3);
            for (long k = 0; k < e; ++k) den = den * Poly(2);
            f.coeffs.push_back(Fraction{num, den});
          }
          return f;
        };
        LocPoly f = sample_locpoly(5);
        Fraction back = poly_loc_to_loc_poly(S, f);
        LocPoly again = loc_poly_to_poly_loc(S, back);
        if (!lp_eq(S, f, again))
          return std::optional<std::string>("roundtrip failed on " +
                                            to_string(f));
        // homomorphism laws on fractions of polynomials
        auto sample_polyfrac = [&]() {
          std::vector<mpq_class> c;
          int deg = static_cast<int>(rng.uniform(0, 3));
          for (int i = 0; i <= deg; ++i) c.emplace_back(rng.uniform(0, 10));
          Poly den = Poly::one();
          long e = rng.uniform(0, 2);
          for (long k = 0; k < e; ++k) den = den * Poly(2);
          return Fraction{Poly(std::move(c)), den};
        };
        Fraction u = sample_polyfrac(), v = sample_polyfrac();
        LocPoly phi_u = loc_poly_to_poly_loc(S, u);
        LocPoly phi_v = loc_poly_to_poly_loc(S, v);
        Fraction sum{u.num * v.den + u.den * v.num, u.den * v.den};
        Fraction prodf{u.num * v.num, u.den * v.den};
        if (!lp_eq(S, loc_poly_to_poly_loc(S, sum), lp_add(S, phi_u, phi_v)))
          return std::optional<std::string>("phi(u+v) != phi(u)+phi(v)");
        if (!lp_eq(S, loc_poly_to_poly_loc(S, prodf), lp_mul(S, phi_u, phi_v)))
          return std::optional<std::string>("phi(uv) != phi(u)phi(v)");
        // injectivity: coefficientwise equality back to cross-multiplication
        if (lp_eq(S, phi_u, phi_v) !=
            (u.num * v.den == u.den * v.num))
          return std::optional<std::string>("injectivity step failed");
        return std::nullopt;
      });
}

/// Prime transfer and lift evidence plus the additively-reduced report and
/// N0 unique-factorization spot checks.
inline SuiteResult suite_ufs_transfer(std::uint64_t seed, std::size_t samples,
                                      int workers, const Budget& budget = {}) {
  return detail::run_indexed(
      "ufs-transfer", seed, samples, workers,
      [&budget](std::size_t i, Rng& rng) -> std::optional<std::string> {
        auto S = make_mult_set(Instance::N0, {Poly(2)});
        static const long kPrimes[] = {3, 5, 7, 11};
        if (i % 4 == 0) {
          long p = kPrimes[(i / 4) % 4];
          Budget small = budget;
          small.pair_cap = std::min(budget.pair_cap, 2000L);
          auto v = prime_transfer_check(Element{Instance::N0, Poly(p)}, S, small);
          if (!v.is_yes())
            return std::optional<std::string>("prime transfer refuted for p=" +
                                              std::to_string(p) + ": " +
                                              v.witness);
        } else if (i % 4 == 1) {
          // pi(2) is a unit: 2 is in the saturation of <2>
          if (!saturation_member(S, Poly(2), budget).is_yes())
            return std::optional<std::string>("2/1 not a unit witness");
          Budget tiny = budget;
          tiny.degree_cap = std::min(budget.degree_cap, 2);
          tiny.height_cap = std::min(budget.height_cap, 4L);
          auto v = prime_lift_check(Instance::N0,
                                    Element{Instance::N0, Poly(i % 8 < 4 ? 2 : 3)},
                                    tiny);
          if (!v.is_yes())
            return std::optional<std::string>("prime lift refuted: " + v.witness);
        } else if (i % 4 == 2) {
          if (!is_additively_reduced(Instance::N0).is_yes() ||
              !is_additively_reduced(Instance::QGE0).is_yes() ||
              !is_additively_reduced(Instance::ZPOLYPOS).is_yes() ||
              !is_additively_reduced(Instance::Z).is_no())
            return std::optional<std::string>("additively-reduced table wrong");
        } else {
          long n = rng.uniform(2, 2000);
          auto zs = factorizations(Element{Instance::N0, Poly(n)}, budget);
          if (!zs.complete || zs.all.size() != 1 ||
              zs.all[0].recompose() != Poly(n))
            return std::optional<std::string>("|Z(" + std::to_string(n) +
                                              ")| != 1");
        }
        return std::nullopt;
      });
}

/// Bi-HFS instance: multiplicative singleton lengths and the additive
/// constant-term length law on seeded ZPOLYPOS samples.
inline SuiteResult suite_bi_hfs(std::uint64_t seed, std::size_t samples,
                                int workers, const Budget& budget = {}) {
  return detail::run_indexed(
      "bi-hfs", seed, samples, workers,
      [&budget](std::size_t i, Rng& rng) -> std::optional<std::string> {
        if (i % 2 == 0) {
          // product of k certified atoms: Z(product) singleton, L = {k}
          static const char* kAtoms[] = {"1+x", "2-x", "2", "3", "1+x+x^2",
                                         "3+2x", "5", "1+2x"};
          int k = static_cast<int>(rng.uniform(1, 4));
          Poly prod = Poly::one();
          int degsum = 0;
          std::size_t kk = 0;
          for (int j = 0; j < k; ++j) {
            Poly a = parse_poly(kAtoms[rng.next() % 8]);
            if (degsum + a.degree() > 5) continue;
            degsum += a.degree();
            prod = prod * a;
            ++kk;
          }
          if (kk == 0) return std::nullopt;
          Budget wide = budget;
          wide.height_cap = std::max(budget.height_cap, 4000L);
          auto zs = factorizations(Element{Instance::ZPOLYPOS, prod}, wide);
          if (!zs.complete || zs.all.size() != 1)
            return std::optional<std::string>("Z(b) not a singleton for " +
                                              to_string(prod));
          if (zs.all[0].length() != kk)
            return std::optional<std::string>("length != atom count for " +
                                              to_string(prod));
          if (zs.all[0].recompose() != prod)
            return std::optional<std::string>("recomposition failed for " +
                                              to_string(prod));
        } else {
          Element g = sample_element(Instance::ZPOLYPOS, rng, 2, 6, false);
          // keep g(0) small so the enumeration stays desk-scale
          std::vector<mpq_class> c(g.v.coeffs());
          c.resize(std::max<std::size_t>(c.size(), 1));
          c[0] = rng.uniform(1, 8);
          g.v = Poly(std::move(c));
          auto rep = bi_hfs_report({g}, budget);
          if (!rep.all_pass())
            return std::optional<std::string>(rep.failures.front());
        }
        return std::nullopt;
      });
}

/// ZXQ non-atomicity: the descent chain and the atom refutation for x.
inline SuiteResult suite_non_atomic(std::uint64_t seed, std::size_t samples,
                                    int workers, const Budget& budget = {}) {
  return detail::run_indexed(
      "non-atomic", seed, samples, workers,
      [&budget](std::size_t i, Rng& rng) -> std::optional<std::string> {
        int depth = static_cast<int>(rng.uniform(1, 20));
        auto chain = non_atomic_witness(depth);
        if (chain.size() != static_cast<std::size_t>(depth) + 1)
          return std::optional<std::string>("chain length wrong");
        auto v = is_atom(Element{Instance::ZXQ, chain[i % chain.size()]}, budget);
        if (!v.is_no())
          return std::optional<std::string>(
              "chain member wrongly judged an atom: " +
              to_string(chain[i % chain.size()]));
        auto zs = factorizations(Element{Instance::ZXQ, Poly::monomial(1, 1)},
                                 budget);
        if (!zs.all.empty() || zs.descent_witness.empty())
          return std::optional<std::string>(
              "x should report no atomic factorization with a descent witness");
        return std::nullopt;
      });
}

using SuiteFn = SuiteResult (*)(std::uint64_t, std::size_t, int, const Budget&);

inline const std::vector<std::pair<std::string, SuiteFn>>& all_suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> kSuites = {
      {"semiring-axioms", suite_semiring_axioms},
      {"localization-axioms", suite_localization_axioms},
      {"saturation-iso", suite_saturation_iso},
      {"ideal-correspondence", suite_ideal_correspondence},
      {"poly-loc-iso", suite_poly_loc_iso},
      {"ufs-transfer", suite_ufs_transfer},
      {"bi-hfs", suite_bi_hfs},
      {"non-atomic", suite_non_atomic},
  };
  return kSuites;
}

}  // namespace semidom

#endif  // SEMIDOM_SUITES_HPP
