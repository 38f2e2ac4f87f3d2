#include <catch2/catch_amalgamated.hpp>

#include "semidom/localization.hpp"
#include "semidom/sampling.hpp"

using namespace semidom;

namespace {
MultiplicativeSet n0_s2() { return make_mult_set(Instance::N0, {Poly(2)}); }
}  // namespace

TEST_CASE("multiplicative set membership", "[localization]") {
  auto S = n0_s2();
  CHECK(mult_set_contains(S, Poly::one()));
  CHECK(mult_set_contains(S, Poly(8)));
  CHECK(!mult_set_contains(S, Poly(6)));
  CHECK(!mult_set_contains(S, Poly::zero()));
  auto T = make_mult_set(Instance::ZPOLYPOS, {parse_poly("1+x"), Poly(2)});
  CHECK(mult_set_contains(T, parse_poly("2+2x")));
  CHECK(!mult_set_contains(T, parse_poly("3+x")));
  CHECK_THROWS_AS(make_mult_set(Instance::N0, {Poly::zero()}), DomainError);
}

TEST_CASE("make_fraction validates numerator and denominator",
          "[localization]") {
  auto S = n0_s2();
  CHECK_NOTHROW(make_fraction(S, Poly(3), Poly(4)));
  CHECK_THROWS_AS(make_fraction(S, parse_poly("-1"), Poly(2)), DomainError);
  CHECK_THROWS_AS(make_fraction(S, Poly(3), Poly(6)), DomainError);
}

TEST_CASE("cross-multiplication equality", "[localization]") {
  auto S = n0_s2();
  CHECK(frac_eq(S, make_fraction(S, Poly(3), Poly(2)),
                make_fraction(S, Poly(6), Poly(4))));
  CHECK(!frac_eq(S, make_fraction(S, Poly(3), Poly(2)),
                 make_fraction(S, Poly(5), Poly(4))));
}

TEST_CASE("fraction arithmetic matches the defining formulas",
          "[localization]") {
  auto S = n0_s2();
  Fraction u = make_fraction(S, Poly(3), Poly(2));
  Fraction v = make_fraction(S, Poly(5), Poly(4));
  Fraction sum = frac_add(S, u, v);
  CHECK(sum.num == Poly(3 * 4 + 2 * 5));
  CHECK(sum.den == Poly(8));
  Fraction prod = frac_mul(S, u, v);
  CHECK(prod.num == Poly(15));
  CHECK(prod.den == Poly(8));
}

TEST_CASE("equivalence is a congruence", "[localization][property]") {
  Rng rng(31);
  auto S = make_mult_set(Instance::ZPOLYPOS, {Poly(2)});
  for (int t = 0; t < 200; ++t) {
    Poly a = sample_element(Instance::ZPOLYPOS, rng, 2, 8).v;
    Poly w = sample_element(Instance::ZPOLYPOS, rng, 2, 8).v;
    Poly d = Poly(1L << rng.uniform(0, 4));
    Poly scale = Poly(1L << rng.uniform(0, 4));
    Fraction u{a, d};
    Fraction u2{a * scale, d * scale};
    Fraction wf{w, Poly::one()};
    REQUIRE(frac_eq(S, u, u2));
    CHECK(frac_eq(S, frac_add(S, u, wf), frac_add(S, u2, wf)));
    CHECK(frac_eq(S, frac_mul(S, u, wf), frac_mul(S, u2, wf)));
  }
}

TEST_CASE("localize_map is an injective homomorphism with unit denominators",
          "[localization][property]") {
  Rng rng(32);
  auto S = n0_s2();
  for (int t = 0; t < 200; ++t) {
    Poly a = sample_element(Instance::N0, rng, 0, 50).v;
    Poly b = sample_element(Instance::N0, rng, 0, 50).v;
    CHECK(frac_eq(S, frac_add(S, localize_map(S, a), localize_map(S, b)),
                  localize_map(S, a + b)));
    CHECK(frac_eq(S, frac_mul(S, localize_map(S, a), localize_map(S, b)),
                  localize_map(S, a * b)));
    CHECK(frac_eq(S, localize_map(S, a), localize_map(S, b)) == (a == b));
  }
  // pi(s) is a unit for generator powers up to 2^10
  Poly p = Poly::one();
  for (int k = 0; k <= 10; ++k) {
    Fraction inv{Poly::one(), p};
    CHECK(frac_eq(S, frac_mul(S, localize_map(S, p), inv),
                  localize_map(S, Poly::one())));
    p = p * Poly(2);
  }
}

TEST_CASE("universal property through the inclusion into QGE0",
          "[localization][property]") {
  Rng rng(33);
  auto S = n0_s2();
  InclusionHom theta{Instance::N0, Instance::QGE0};
  for (int t = 0; t < 200; ++t) {
    Poly a = sample_element(Instance::N0, rng, 0, 30).v;
    // phi . pi = theta, exactly
    CHECK(universal_factor(S, theta, localize_map(S, a)).v == a);
    // phi(t/s) = theta(t) theta(s)^-1
    Fraction u{a, Poly(4)};
    CHECK(universal_factor(S, theta, u).v == *a.div_exact(Poly(4)));
  }
  // the target must make every generator a unit
  InclusionHom bad{Instance::N0, Instance::Z};
  CHECK_THROWS_AS(universal_factor(S, bad, Fraction{Poly(1), Poly(2)}),
                  DomainError);
}

TEST_CASE("saturation membership", "[localization]") {
  auto S4 = make_mult_set(Instance::N0, {Poly(4)});
  CHECK(saturation_member(S4, Poly(2)).is_yes());
  CHECK(saturation_member(S4, Poly(4)).is_yes());
  CHECK(saturation_member(S4, Poly(1)).is_yes());
  CHECK(saturation_member(S4, Poly(3)).is_no());
  CHECK(saturation_member(S4, Poly(6)).is_no());
  auto T = make_mult_set(Instance::ZPOLYPOS, {parse_poly("2+2x")});
  CHECK(saturation_member(T, parse_poly("1+x")).is_yes());
  CHECK(saturation_member(T, Poly(2)).is_yes());
}

TEST_CASE("saturation gives the same localization", "[localization][property]") {
  Rng rng(34);
  auto S4 = make_mult_set(Instance::N0, {Poly(4)});
  auto S2 = n0_s2();
  for (int t = 0; t < 200; ++t) {
    Poly a = sample_element(Instance::N0, rng, 0, 50).v;
    long m = rng.uniform(0, 5);
    Poly d2 = Poly::one(), d4 = Poly::one(), scale = Poly::one();
    for (long k = 0; k < m; ++k) {
      d2 = d2 * Poly(2);
      d4 = d4 * Poly(4);
      scale = scale * Poly(2);
    }
    // a/2^m and (2^m a)/4^m agree under cross-multiplication, and the
    // S4 image is a legal S4-fraction
    Fraction img = make_fraction(S4, scale * a, d4);
    CHECK(img.num * d2 == img.den * a);
    // comparison maps are mutually inverse up to frac_eq
    Fraction back = make_fraction(S2, img.num, img.den);
    CHECK(frac_eq(S2, back, Fraction{a, d2}));
  }
}

TEST_CASE("deterministic member enumeration", "[localization]") {
  auto S = make_mult_set(Instance::N0, {Poly(2), Poly(3)});
  auto a = enumerate_members(S, 12);
  auto b = enumerate_members(S, 12);
  CHECK(a == b);
  CHECK(std::find(a.begin(), a.end(), Poly(6)) != a.end());
  CHECK(std::find(a.begin(), a.end(), Poly(5)) == a.end());
}
