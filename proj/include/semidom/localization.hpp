#ifndef SEMIDOM_LOCALIZATION_HPP
#define SEMIDOM_LOCALIZATION_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "semidom/instance.hpp"
#include "semidom/numutil.hpp"
#include "semidom/poly.hpp"
#include "semidom/verdict.hpp"

namespace semidom {

/// A finitely generated multiplicative subset of the nonzero elements.
/// 1 is always a member; 0 never is.
struct MultiplicativeSet {
  Instance inst;
  std::vector<Poly> gens;
};

inline MultiplicativeSet make_mult_set(Instance inst, std::vector<Poly> gens) {
  for (const auto& g : gens) {
    if (g.is_zero()) throw DomainError("0 cannot generate a multiplicative set");
    if (!membership(inst, g))
      throw DomainError("generator " + to_string(g) + " not a member of " +
                        std::string(to_string(inst)));
  }
  return MultiplicativeSet{inst, std::move(gens)};
}

namespace detail {

inline bool mult_set_contains_rec(const MultiplicativeSet& S, const Poly& t,
                                  int depth) {
  if (t == Poly::one()) return true;
  if (depth <= 0) return false;
  for (const auto& g : S.gens) {
    if (g == Poly::one()) continue;
    if (auto q = try_divide(S.inst, g, t))
      if (mult_set_contains_rec(S, *q, depth - 1)) return true;
  }
  return false;
}

}  // namespace detail

/// Bounded exponent-vector membership test for <gens>.
inline bool mult_set_contains(const MultiplicativeSet& S, const Poly& t,
                              int exponent_cap = 64) {
  if (t.is_zero()) return false;
  return detail::mult_set_contains_rec(
      S, t, exponent_cap * static_cast<int>(std::max<std::size_t>(1, S.gens.size())));
}

/// Deterministic enumeration of members of <gens>, ascending in the
/// canonical polynomial order. Per-generator exponents are capped, and
/// nonconstant generators are additionally capped by degree.
inline std::vector<Poly> enumerate_members(const MultiplicativeSet& S,
                                           int exponent_cap,
                                           std::size_t count_cap = 4096) {
  std::vector<Poly> out;
  std::function<void(std::size_t, Poly)> rec = [&](std::size_t i, Poly acc) {
    if (out.size() >= count_cap) return;
    if (i == S.gens.size()) {
      out.push_back(std::move(acc));
      return;
    }
    const Poly& g = S.gens[i];
    int cap = exponent_cap;
    if (g.degree() > 0) cap = std::min(cap, 16 / g.degree());
    Poly cur = acc;
    for (int e = 0; e <= cap; ++e) {
      rec(i + 1, cur);
      if (e < cap) cur = cur * g;
    }
  };
  rec(0, Poly::one());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// An element of the localization: num / den with den in <S>.
/// Equality is cross-multiplication, never structural.
struct Fraction {
  Poly num;
  Poly den;
};

inline std::string to_string(const Fraction& u) {
  std::string n = to_string(u.num);
  std::string d = to_string(u.den);
  if (u.num.degree() > 0 || u.num.constant_term().get_den() != 1)
    n = "(" + n + ")";
  if (u.den.degree() > 0) d = "(" + d + ")";
  return n + "/" + d;
}

inline Fraction make_fraction(const MultiplicativeSet& S, Poly num, Poly den) {
  if (!membership(S.inst, num))
    throw DomainError("numerator " + to_string(num) + " not a member");
  if (!mult_set_contains(S, den))
    throw DomainError("denominator " + to_string(den) +
                      " not in the multiplicative set");
  return Fraction{std::move(num), std::move(den)};
}

/// The canonical map pi(t) = t/1.
inline Fraction localize_map(const MultiplicativeSet& S, const Poly& t) {
  return make_fraction(S, t, Poly::one());
}

inline bool frac_eq(const MultiplicativeSet& S, const Fraction& u,
                    const Fraction& v) {
  (void)S;
  return u.num * v.den == u.den * v.num;
}

inline Fraction frac_add(const MultiplicativeSet& S, const Fraction& u,
                         const Fraction& v) {
  return make_fraction(S, u.num * v.den + u.den * v.num, u.den * v.den);
}

inline Fraction frac_mul(const MultiplicativeSet& S, const Fraction& u,
                         const Fraction& v) {
  return make_fraction(S, u.num * v.num, u.den * v.den);
}

/// Multiplicative inverse of a unit value, for homomorphism targets.
inline Poly inverse_of_unit(Instance inst, const Poly& u) {
  if (!is_mult_unit(inst, u))
    throw DomainError(to_string(u) + " is not a unit of " +
                      std::string(to_string(inst)));
  if (u.is_constant()) return Poly(mpq_class(1) / u.constant_term());
  throw DomainError("no inverse representation for " + to_string(u));
}

/// A homomorphism into another shipped instance. All shipped instances
/// share the ambient Q[x], so the shipped homomorphisms are inclusions:
/// the value is carried over unchanged and checked for membership.
struct InclusionHom {
  Instance from;
  Instance to;

  Element apply(const Poly& t) const { return make_element(to, t); }
};

/// The unique phi with phi . pi = theta, evaluated at u.
/// Requires every generator image to be a unit of the target.
inline Element universal_factor(const MultiplicativeSet& S,
                                const InclusionHom& theta, const Fraction& u) {
  if (theta.from != S.inst) throw DomainError("homomorphism source mismatch");
  for (const auto& g : S.gens)
    if (!is_mult_unit(theta.to, theta.apply(g).v))
      throw DomainError("theta image of generator " + to_string(g) +
                        " is not a unit in " +
                        std::string(to_string(theta.to)));
  Poly img = theta.apply(u.num).v * inverse_of_unit(theta.to, theta.apply(u.den).v);
  return make_element(theta.to, img);
}

/// Membership in the saturation: s in Sbar iff s divides some member of
/// <S>. Exact for the gcd instances (monotone divisor argument on prime
/// exponents); bounded search with Unknown fallback elsewhere.
inline Verdict saturation_member(const MultiplicativeSet& S, const Poly& s,
                                 const Budget& budget = {}) {
  if (s.is_zero()) return Verdict::no("0 divides only 0, and 0 is not in <S>");
  if (is_mult_unit(S.inst, s)) return Verdict::yes("unit divides 1");
  if (gcd_available(S.inst)) {
    mpz_class n = abs(s.constant_term().get_num());
    mpz_class prod = 1;
    for (const auto& g : S.gens) prod *= abs(g.constant_term().get_num());
    if (prod == 1) return Verdict::no("only units divide members of <S>");
    // v_p(n) <= bitlength(n), so prod^N dominates every member's p-part
    int N = static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 2)) + 1;
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), prod.get_mpz_t(), N);
    if (power % n == 0)
      return Verdict::yes(to_string(s) + " divides (prod gens)^" +
                          std::to_string(N));
    return Verdict::no(to_string(s) +
                       " has a prime factor outside the generators");
  }
  for (const auto& m : enumerate_members(S, budget.exponent_cap))
    if (try_divide(S.inst, s, m))
      return Verdict::yes(to_string(s) + " divides " + to_string(m));
  return Verdict::unknown(budget);
}

}  // namespace semidom

#endif  // SEMIDOM_LOCALIZATION_HPP
