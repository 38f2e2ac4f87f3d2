#ifndef SEMIDOM_FACTOR_HPP
#define SEMIDOM_FACTOR_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semidom/instance.hpp"
#include "semidom/kronecker.hpp"
#include "semidom/localization.hpp"
#include "semidom/numutil.hpp"
#include "semidom/polyloc.hpp"
#include "semidom/primes.hpp"
#include "semidom/sampling.hpp"
#include "semidom/verdict.hpp"

namespace semidom {

enum class FactorKind { Multiplicative, Additive };

/// unit * prod(atoms) == target (or unit + sum(atoms) for the additive
/// kind). Atoms are unit-normalized and canonically sorted.
struct Factorization {
  Poly unit;
  std::vector<Poly> atoms;
  FactorKind kind = FactorKind::Multiplicative;

  std::size_t length() const { return atoms.size(); }

  Poly recompose() const {
    Poly acc = unit;
    for (const auto& a : atoms)
      acc = kind == FactorKind::Multiplicative ? acc * a : acc + a;
    return acc;
  }

  friend bool operator<(const Factorization& a, const Factorization& b) {
    return std::tie(a.atoms, a.unit) < std::tie(b.atoms, b.unit);
  }
  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.kind == b.kind && a.unit == b.unit && a.atoms == b.atoms;
  }
};

inline std::string to_string(const Factorization& z) {
  std::string out;
  bool mult = z.kind == FactorKind::Multiplicative;
  if (z.atoms.empty()) return to_string(z.unit);
  if (!(mult && z.unit == Poly::one()) && !(!mult && z.unit.is_zero()))
    out += to_string(z.unit) + (mult ? "*" : " + ");
  for (std::size_t i = 0; i < z.atoms.size(); ++i) {
    const Poly& a = z.atoms[i];
    if (!mult) {
      if (i > 0) out += " + ";
      out += a.degree() > 0 ? "(" + to_string(a) + ")" : to_string(a);
    } else if (a.degree() > 0) {
      out += "(" + to_string(a) + ")";
    } else {
      if (!out.empty() && out.back() != ')') out += "*";
      out += to_string(a);
    }
  }
  return out;
}

/// Z(b) within budget. complete means the enumeration provably
/// exhausted; descent_witness is set for non-atomic refusals.
struct FactorizationSet {
  std::vector<Factorization> all;
  bool complete = false;
  std::string descent_witness;
};

struct LengthSet {
  std::set<std::size_t> lengths;
  bool complete = false;
};

/// Divisibility in the instance, with quotient witness. Decidable for
/// every shipped instance (unique ambient quotient + membership check).
struct DivisionVerdict {
  Verdict verdict;
  std::optional<Poly> quotient;
};

inline DivisionVerdict divides(const Element& a, const Element& b) {
  require_same_instance(a, b);
  if (a.v.is_zero()) throw DomainError("divides: divisor is zero");
  if (auto q = try_divide(a.inst, a.v, b.v))
    return {Verdict::yes("quotient " + to_string(*q)), q};
  if (!b.v.div_exact(a.v))
    return {Verdict::no("no ambient quotient"), std::nullopt};
  return {Verdict::no("ambient quotient exists but fails membership"),
          std::nullopt};
}

namespace detail {

/// ZPOLYPOS associate normalization: flip irreducible factors to
/// positive constant term. Sign parity reconciles automatically because
/// the target has positive constant term.
inline Poly normalize_atom(Instance inst, const Poly& a) {
  if (inst == Instance::ZPOLYPOS) {
    if (a.constant_term() < 0) return -a;
    return a;
  }
  if (a.leading() < 0) return -a;
  return a;
}

inline std::optional<Factorization> factor_via_kronecker(Instance inst,
                                                         const Poly& b,
                                                         const Budget& budget) {
  auto kr = kronecker_factor(b, budget);
  if (!kr) return std::nullopt;
  Factorization z;
  z.unit = Poly(kr->sign);
  for (const auto& [p, e] : factor_integer(kr->content))
    for (int k = 0; k < e; ++k) z.atoms.push_back(Poly(mpq_class(p)));
  int flips = 0;
  for (const auto& q : kr->irreducibles) {
    Poly n = normalize_atom(inst, q);
    if (n != q) ++flips;
    z.atoms.push_back(n);
  }
  if (inst == Instance::ZPOLYPOS) {
    // sign unit absorbed by the flips; the unit group is trivial
    if ((flips % 2 == 0) != (kr->sign == 1))
      throw DomainError("internal: sign parity in ZPOLYPOS normalization");
    z.unit = Poly::one();
  }
  std::sort(z.atoms.begin(), z.atoms.end());
  return z;
}

}  // namespace detail

/// Atom test. Certified both ways for the ambient-UFD instances at desk
/// scale, and for ZXQ via the constant-term descent/scaling arguments.
inline Verdict is_atom(const Element& a, const Budget& budget = {}) {
  if (a.v.is_zero()) return Verdict::no("zero is not an atom");
  if (is_mult_unit(a.inst, a.v)) return Verdict::no("units are not atoms");
  switch (a.inst) {
    case Instance::N0:
    case Instance::Z: {
      mpz_class n = abs(a.v.constant_term().get_num());
      if (is_prime_trial(n)) return Verdict::yes("prime integer");
      auto f = factor_integer(n);
      mpz_class d = f.front().first;
      return Verdict::no(n.get_str() + " = " + d.get_str() + " * " +
                         mpz_class(n / d).get_str());
    }
    case Instance::QGE0:
      // unreachable: every nonzero element is a unit, handled above
      return Verdict::no("units are not atoms");
    case Instance::ZPOLY:
    case Instance::ZPOLYPOS: {
      auto kr = kronecker_factor(a.v, budget);
      if (!kr) return Verdict::unknown(budget);
      std::size_t nfactors = kr->irreducibles.size();
      for (const auto& [p, e] : factor_integer(kr->content))
        nfactors += static_cast<std::size_t>(e);
      if (nfactors == 1) return Verdict::yes("irreducible in Z[x]");
      Poly first = kr->content > 1
                       ? Poly(mpq_class(factor_integer(kr->content).front().first))
                       : detail::normalize_atom(a.inst, kr->irreducibles.front());
      Poly rest = *a.v.div_exact(first);
      return Verdict::no(to_string(a.v) + " = (" + to_string(first) + ")*(" +
                         to_string(rest) + ")");
    }
    case Instance::ZXQ: {
      if (a.v.constant_term() == 0)
        return Verdict::no(to_string(a.v) + " = 2*(" +
                           to_string(*a.v.div_exact(Poly(2))) + ")" +
                           ", both nonunits; descent continues forever");
      if (a.v.is_constant()) {
        mpz_class n = abs(a.v.constant_term().get_num());
        if (is_prime_trial(n)) return Verdict::yes("prime integer constant");
        mpz_class d = factor_integer(n).front().first;
        return Verdict::no(n.get_str() + " = " + d.get_str() + " * " +
                           mpz_class(n / d).get_str());
      }
      mpz_class c0 = abs(a.v.constant_term().get_num());
      if (c0 > 1) {
        mpz_class p = factor_integer(c0).front().first;
        Poly q = *a.v.div_exact(Poly(mpq_class(p)));
        return Verdict::no(to_string(a.v) + " = " + p.get_str() + "*(" +
                           to_string(q) + "), both nonunits");
      }
      // |f(0)| = 1: atom iff irreducible over Q[x]; scale to a primitive
      // integer polynomial and use Kronecker.
      mpz_class lcm = 1;
      for (const auto& c : a.v.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
      Poly F = a.v * Poly(mpq_class(lcm));
      auto cont = F.content();
      F = *F.div_exact(Poly(mpq_class(cont)));
      auto kr = kronecker_factor(F, budget);
      if (!kr) return Verdict::unknown(budget);
      if (kr->irreducibles.size() == 1)
        return Verdict::yes("irreducible over Q[x], constant term a unit");
      // split into two nonconstant Q[x] factors, rescaled into the instance
      Poly g = kr->irreducibles.front();
      Poly h = *a.v.div_exact(g);
      mpq_class g0 = g.constant_term();  // nonzero: a(0) != 0
      g = g * Poly(1 / g0);
      h = h * Poly(g0);
      return Verdict::no(to_string(a.v) + " = (" + to_string(g) + ")*(" +
                         to_string(h) + "), both nonunits");
    }
  }
  return Verdict::unknown(budget);
}

/// Z(b): the set of factorizations into normalized atoms. For the
/// ambient-UFD instances the ambient factorization is unique up to
/// associates and the normalization is forced, so the set is computed
/// directly from the certified ambient factorization.
inline FactorizationSet factorizations(const Element& b,
                                       const Budget& budget = {}) {
  if (b.v.is_zero()) throw DomainError("factorizations of zero");
  FactorizationSet out;
  if (is_mult_unit(b.inst, b.v)) {
    out.all.push_back(Factorization{b.v, {}, FactorKind::Multiplicative});
    out.complete = true;
    return out;
  }
  switch (b.inst) {
    case Instance::N0:
    case Instance::Z: {
      mpz_class n = b.v.constant_term().get_num();
      Factorization z;
      z.unit = Poly(n < 0 ? -1 : 1);
      for (const auto& [p, e] : factor_integer(abs(n)))
        for (int k = 0; k < e; ++k) z.atoms.push_back(Poly(mpq_class(p)));
      out.all.push_back(std::move(z));
      out.complete = true;
      return out;
    }
    case Instance::QGE0:
      out.complete = true;  // nonzero nonunits do not exist
      return out;
    case Instance::ZPOLY:
    case Instance::ZPOLYPOS: {
      if (auto z = detail::factor_via_kronecker(b.inst, b.v, budget)) {
        out.all.push_back(std::move(*z));
        out.complete = true;
      }
      return out;
    }
    case Instance::ZXQ: {
      if (b.v.constant_term() == 0) {
        out.descent_witness =
            "x-divisible: " + to_string(b.v) + " = 2*(" +
            to_string(*b.v.div_exact(Poly(2))) +
            "), and the cofactor chain never reaches atoms";
        return out;
      }
      if (b.v.is_constant()) {
        mpz_class n = b.v.constant_term().get_num();
        Factorization z;
        z.unit = Poly(n < 0 ? -1 : 1);
        for (const auto& [p, e] : factor_integer(abs(n)))
          for (int k = 0; k < e; ++k) z.atoms.push_back(Poly(mpq_class(p)));
        out.all.push_back(std::move(z));
        out.complete = true;
        return out;
      }
      return out;  // nonconstant zxq enumeration is out of scope
    }
  }
  return out;
}

inline LengthSet length_set(const Element& b, const Budget& budget = {}) {
  auto zs = factorizations(b, budget);
  LengthSet out;
  out.complete = zs.complete;
  for (const auto& z : zs.all) out.lengths.insert(z.length());
  return out;
}

/// Additive decompositions of g in ZPOLYPOS into additive atoms (members
/// with constant term 1). Infinitely many exist in general; enumeration
/// bounds the coefficient support and never claims completeness.
inline FactorizationSet additive_factorizations(const Element& g,
                                                const Budget& budget = {}) {
  if (g.inst != Instance::ZPOLYPOS)
    throw DomainError("additive factorizations are shipped for zpolypos only");
  if (g.v.is_zero()) throw DomainError("additive factorization of zero");
  FactorizationSet out;
  mpz_class m_z = g.v.constant_term().get_num();
  if (m_z > 16) return out;  // enumeration scale guard
  int m = static_cast<int>(m_z.get_si());

  long B = mpz_get_si(g.v.height().get_mpz_t()) + 2;  // budget slack
  B = std::min(B, budget.height_cap);
  int D = std::max(g.v.degree(), 1);
  D = std::min(D, budget.degree_cap);

  // candidate offsets h with h(0) = 0: parts are 1 + h. Ordered by
  // height so the zero offset comes first and solutions appear early.
  std::vector<Poly> offsets;
  {
    std::vector<long> idx(D, -B);
    bool done = false;
    while (!done) {
      std::vector<mpq_class> c(D + 1, mpq_class(0));
      for (int i = 0; i < D; ++i) c[i + 1] = idx[i];
      offsets.push_back(Poly(std::move(c)));
      int i = 0;
      while (i < D && ++idx[i] > B) {
        idx[i] = -B;
        ++i;
      }
      if (i == D) done = true;
    }
    std::sort(offsets.begin(), offsets.end(), [](const Poly& a, const Poly& b) {
      mpz_class ha = a.height(), hb = b.height();
      if (ha != hb) return ha < hb;
      return a < b;
    });
  }

  Poly target = g.v - Poly(mpq_class(m));
  long results_left = budget.enum_cap;
  long steps_left = 2'000'000;
  std::vector<Poly> parts;
  std::function<void(std::size_t, int, Poly)> rec = [&](std::size_t lo, int k,
                                                        Poly rest) {
    if (results_left <= 0 || --steps_left <= 0) return;
    if (rest.height() > mpz_class(B) * k) return;  // unreachable remainder
    if (k == 1) {
      // last part is forced by the remaining sum
      if (rest.height() <= B) {
        Factorization z;
        z.unit = Poly::zero();
        z.kind = FactorKind::Additive;
        z.atoms = parts;
        z.atoms.push_back(rest);
        for (auto& a : z.atoms) a = a + Poly::one();
        std::sort(z.atoms.begin(), z.atoms.end());
        out.all.push_back(std::move(z));
        --results_left;
      }
      return;
    }
    for (std::size_t i = lo; i < offsets.size(); ++i) {
      if (results_left <= 0 || steps_left <= 0) return;
      parts.push_back(offsets[i]);
      rec(i, k - 1, rest - offsets[i]);
      parts.pop_back();
    }
  };
  rec(0, m, target);
  std::sort(out.all.begin(), out.all.end());
  out.all.erase(std::unique(out.all.begin(), out.all.end()), out.all.end());
  return out;
}

/// Prime-element verdict: certificate via the ambient-UFD normalization
/// arguments, refutation via bounded pair search.
inline Verdict is_prime(const Element& p, const Budget& budget = {}) {
  if (p.v.is_zero() || is_mult_unit(p.inst, p.v))
    throw DomainError("is_prime: zero or unit input");
  if (auto cert = certify_prime(p.inst, p.v, budget))
    return Verdict::yes(*cert);
  auto samples = enumerate_small_elements(p.inst, std::min(budget.degree_cap, 3),
                                          std::min(budget.height_cap, 6L), 400);
  long pairs = budget.pair_cap;
  for (const auto& a : samples) {
    if (a.is_zero()) continue;
    if (try_divide(p.inst, p.v, a)) continue;
    for (const auto& b : samples) {
      if (b.is_zero() || b < a) continue;
      if (--pairs < 0) return Verdict::unknown(budget);
      if (try_divide(p.inst, p.v, b)) continue;
      if (try_divide(p.inst, p.v, a * b))
        return Verdict::no("p | (" + to_string(a) + ")*(" + to_string(b) +
                           ") but p divides neither factor");
    }
  }
  return Verdict::unknown(budget);
}

namespace detail {

/// p/1 divides w in the localization iff p | w.num * s in the instance
/// for some s in <S> (with member quotient).
inline bool pi_divides(const MultiplicativeSet& S, const Poly& p,
                       const Fraction& w, int exponent_cap) {
  for (const auto& s : enumerate_members(S, std::min(exponent_cap, 10), 128))
    if (try_divide(S.inst, p, w.num * s)) return true;
  return false;
}

}  // namespace detail

/// Prime-transfer evidence: bounded refutation search against the primality
/// of pi(p) in the localization. A pass is recorded as evidence, never
/// as a certificate.
inline Verdict prime_transfer_check(const Element& p,
                                    const MultiplicativeSet& S,
                                    const Budget& budget = {}) {
  if (p.inst != S.inst) throw DomainError("instance mismatch");
  if (!is_prime(p, budget).is_yes())
    throw DomainError("prime_transfer_check requires a certified prime");
  if (saturation_member(S, p.v, budget).is_yes())
    throw DomainError("p is in the saturation of S: pi(p) is a unit");

  long h = std::min(budget.height_cap, 60L);
  auto nums = enumerate_small_elements(p.inst, std::min(budget.degree_cap, 2),
                                       h, 256);
  auto dens = enumerate_members(S, 3, 16);
  std::vector<Fraction> fracs;
  for (const auto& n : nums)
    for (const auto& d : dens) {
      if (n.is_zero()) continue;
      fracs.push_back(Fraction{n, d});
    }

  long pairs = budget.pair_cap;
  long checked = 0;
  for (std::size_t i = 0; i < fracs.size(); ++i) {
    bool pi = detail::pi_divides(S, p.v, fracs[i], budget.exponent_cap);
    if (pi) continue;
    for (std::size_t j = i; j < fracs.size(); ++j) {
      if (--pairs < 0)
        return Verdict{Answer::Yes,
                       "evidence: no refutation among " +
                           std::to_string(checked) +
                           " candidate pairs (bounded search, not a proof)",
                       budget};
      if (detail::pi_divides(S, p.v, fracs[j], budget.exponent_cap)) continue;
      ++checked;
      Fraction prod{fracs[i].num * fracs[j].num, fracs[i].den * fracs[j].den};
      if (detail::pi_divides(S, p.v, prod, budget.exponent_cap))
        return Verdict::no("pi(p) | " + to_string(fracs[i]) + " * " +
                           to_string(fracs[j]) + " but divides neither");
    }
  }
  return Verdict{Answer::Yes,
                 "evidence: no refutation among " + std::to_string(checked) +
                     " candidate pairs (bounded search, not a proof)",
                 budget};
}

/// Prime-lift check: exhaustive refutation search for the primality of a
/// constant prime p inside base[x], over bounded degree and height.
/// Works modulo p on residue classes, so the stated caps are exhausted
/// exactly.
inline Verdict prime_lift_check(Instance base, const Element& p,
                                const Budget& budget = {}) {
  if (p.inst != base) throw DomainError("instance mismatch");
  if (!p.v.is_constant())
    throw DomainError("prime_lift_check ships for constant primes");
  if (!is_prime(p, budget).is_yes())
    throw DomainError("prime_lift_check requires a certified prime");
  mpz_class pabs = abs(p.v.constant_term().get_num());
  long pv = mpz_get_si(pabs.get_mpz_t());
  int deg = std::min(budget.degree_cap, 3);
  long h = std::min(budget.height_cap, 6L);

  // distinct nonzero residue vectors of base polynomials within caps
  std::set<std::vector<long>> residues;
  long lo = base == Instance::N0 ? 0 : -h;
  std::vector<long> idx(deg + 1, lo);
  bool done = false;
  while (!done) {
    std::vector<long> r(deg + 1);
    bool nonzero = false;
    for (int i = 0; i <= deg; ++i) {
      r[i] = ((idx[i] % pv) + pv) % pv;
      if (r[i] != 0) nonzero = true;
    }
    if (nonzero) residues.insert(std::move(r));
    int i = 0;
    while (i <= deg && ++idx[i] > h) {
      idx[i] = lo;
      ++i;
    }
    if (i > deg) done = true;
  }

  for (const auto& f : residues)
    for (const auto& g : residues) {
      std::vector<long> conv(f.size() + g.size() - 1, 0);
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
          conv[i + j] = (conv[i + j] + f[i] * g[j]) % pv;
      bool zero = std::all_of(conv.begin(), conv.end(),
                              [](long c) { return c == 0; });
      if (zero) {
        auto render = [](const std::vector<long>& v) {
          std::vector<mpq_class> c(v.begin(), v.end());
          return to_string(Poly(std::move(c)));
        };
        return Verdict::no("p | (" + render(f) + ")*(" + render(g) +
                           ") mod-p residue witness");
      }
    }
  return Verdict::yes("exhausted all residue pairs, degree <= " +
                      std::to_string(deg) + ", height <= " +
                      std::to_string(h) + ": no refutation");
}

/// Bi-HFS verification report for ZPOLYPOS samples.
struct BiHfsReport {
  std::size_t checked = 0;
  std::size_t mult_pass = 0;
  std::size_t add_pass = 0;
  std::vector<std::string> failures;

  bool all_pass() const { return failures.empty(); }
};

inline BiHfsReport bi_hfs_report(const std::vector<Element>& samples,
                                 const Budget& budget = {}) {
  BiHfsReport rep;
  for (const auto& g : samples) {
    if (g.inst != Instance::ZPOLYPOS)
      throw DomainError("bi_hfs_report ships for zpolypos");
    if (g.v.is_zero()) continue;
    ++rep.checked;
    if (is_mult_unit(g.inst, g.v)) {
      // boundary: 1 is the multiplicative unit (length set {0}) and the
      // additive atom of constant term 1 (additive length 1)
      ++rep.mult_pass;
      ++rep.add_pass;
      continue;
    }
    auto ls = length_set(g, budget);
    if (ls.complete && ls.lengths.size() == 1)
      ++rep.mult_pass;
    else
      rep.failures.push_back("mult length set not a certified singleton for " +
                             to_string(g.v));
    auto add = additive_factorizations(g, budget);
    mpz_class g0 = g.v.constant_term().get_num();
    bool ok = !add.all.empty();
    for (const auto& z : add.all) {
      if (mpz_class(z.length()) != g0) ok = false;
      if (z.recompose() != g.v) ok = false;
    }
    if (ok)
      ++rep.add_pass;
    else
      rep.failures.push_back("additive length law failed for " + to_string(g.v));
  }
  return rep;
}

/// The classical non-atomicity witness in ZXQ: the descent chain
/// x = 2*(x/2), x/2 = 2*(x/4), ... Every chain member is verified a
/// member and every cofactor a nonunit.
inline std::vector<Poly> non_atomic_witness(int depth) {
  std::vector<Poly> chain;
  mpq_class c = 1;
  for (int k = 0; k <= depth; ++k) {
    Poly f = Poly::monomial(c, 1);
    if (!membership(Instance::ZXQ, f))
      throw DomainError("internal: chain member left the instance");
    if (k > 0) {
      Poly two(2);
      if (is_mult_unit(Instance::ZXQ, two))
        throw DomainError("internal: cofactor is a unit");
      if (Poly(2) * f != chain.back())
        throw DomainError("internal: chain step does not recompose");
    }
    chain.push_back(f);
    c /= 2;
  }
  return chain;
}

}  // namespace semidom

#endif  // SEMIDOM_FACTOR_HPP
