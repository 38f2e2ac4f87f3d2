#ifndef SEMIDOM_POLYLOC_HPP
#define SEMIDOM_POLYLOC_HPP

#include <string>
#include <vector>

#include "semidom/instance.hpp"
#include "semidom/localization.hpp"
#include "semidom/poly.hpp"

namespace semidom {

/// The polynomial semidomain S[x] over a degree-0 base instance:
/// elements are polynomials whose coefficients are members of the base.
struct PolySemidomain {
  Instance base;

  bool member(const Poly& f) const {
    for (const auto& c : f.coeffs())
      if (!membership(base, Poly(c))) return false;
    return true;
  }

  /// Divisibility in S[x]: unique ambient quotient, coefficientwise
  /// membership check.
  std::optional<Poly> try_divide(const Poly& a, const Poly& b) const {
    if (a.is_zero()) throw DomainError("division by zero");
    auto q = b.div_exact(a);
    if (!q || !member(*q)) return std::nullopt;
    return q;
  }
};

/// A polynomial over the localization S^-1 S: dense coefficient list of
/// fractions. Equality is coefficientwise frac_eq.
struct LocPoly {
  std::vector<Fraction> coeffs;

  Fraction coeff(const std::size_t i) const {
    return i < coeffs.size() ? coeffs[i] : Fraction{Poly::zero(), Poly::one()};
  }
  std::size_t size() const { return coeffs.size(); }
};

inline std::string to_string(const LocPoly& f) {
  if (f.coeffs.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (!out.empty()) out += " + ";
    out += to_string(f.coeffs[i]);
    if (i >= 1) out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

inline bool lp_eq(const MultiplicativeSet& S, const LocPoly& f,
                  const LocPoly& g) {
  std::size_t n = std::max(f.size(), g.size());
  for (std::size_t i = 0; i < n; ++i)
    if (!frac_eq(S, f.coeff(i), g.coeff(i))) return false;
  return true;
}

inline LocPoly lp_add(const MultiplicativeSet& S, const LocPoly& f,
                      const LocPoly& g) {
  LocPoly out;
  std::size_t n = std::max(f.size(), g.size());
  for (std::size_t i = 0; i < n; ++i)
    out.coeffs.push_back(frac_add(S, f.coeff(i), g.coeff(i)));
  return out;
}

inline LocPoly lp_mul(const MultiplicativeSet& S, const LocPoly& f,
                      const LocPoly& g) {
  LocPoly out;
  if (f.size() == 0 || g.size() == 0) return out;
  out.coeffs.assign(f.size() + g.size() - 1, Fraction{Poly::zero(), Poly::one()});
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      out.coeffs[i + j] =
          frac_add(S, out.coeffs[i + j], frac_mul(S, f.coeffs[i], g.coeffs[j]));
  return out;
}

/// Polynomial-localization isomorphism, forward direction: (sum c_i x^i) / s  |->  sum (c_i/s) x^i.
/// The denominator must be a constant lying in <S>.
inline LocPoly loc_poly_to_poly_loc(const MultiplicativeSet& S,
                                    const Fraction& u) {
  if (!u.den.is_constant())
    throw DomainError("denominator must be a constant polynomial");
  if (!mult_set_contains(S, u.den))
    throw DomainError("denominator not in <S>");
  PolySemidomain sx{S.inst};
  if (!sx.member(u.num))
    throw DomainError("numerator is not a polynomial over the base");
  LocPoly out;
  for (int i = 0; i <= u.num.degree(); ++i)
    out.coeffs.push_back(Fraction{Poly(u.num.coeff(i)), u.den});
  return out;
}

/// Polynomial-localization isomorphism, backward direction: with coefficients d_i/s_i, returns
/// (sum d_i s_i* x^i) / (s_0 ... s_n) where s_j* = (s_0...s_n)/s_j.
inline Fraction poly_loc_to_loc_poly(const MultiplicativeSet&,
                                     const LocPoly& f) {
  if (f.size() == 0) return Fraction{Poly::zero(), Poly::one()};
  Poly den = Poly::one();
  for (const auto& c : f.coeffs) den = den * c.den;
  Poly num;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Poly star = *den.div_exact(f.coeffs[i].den);
    num = num + Poly::monomial(1, i) * f.coeffs[i].num * star;
  }
  return Fraction{num, den};
}

}  // namespace semidom

#endif  // SEMIDOM_POLYLOC_HPP
