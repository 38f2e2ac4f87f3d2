#ifndef SEMIDOM_INSTANCE_HPP
#define SEMIDOM_INSTANCE_HPP

#include <string>

#include "semidom/poly.hpp"
#include "semidom/verdict.hpp"

namespace semidom {

/// The shipped semidomain instances. Every value lives inside the common
/// ambient Q[x]; the instance determines membership, units, and which
/// factorization strategies are certifiable.
///
///   N0       - natural numbers with zero
///   Z        - integers (a ring, the degenerate case)
///   QGE0     - nonnegative rationals (a semifield)
///   ZPOLY    - integer polynomials
///   ZPOLYPOS - {0} together with integer polynomials of positive
///              constant term (the bi-HFS instance)
///   ZXQ      - rational polynomials with integer constant term
///              (the classical non-atomic subring of Q[x])
enum class Instance { N0, Z, QGE0, ZPOLY, ZPOLYPOS, ZXQ };

inline const char* to_string(Instance i) {
  switch (i) {
    case Instance::N0: return "n0";
    case Instance::Z: return "z";
    case Instance::QGE0: return "qge0";
    case Instance::ZPOLY: return "zpoly";
    case Instance::ZPOLYPOS: return "zpolypos";
    case Instance::ZXQ: return "zxq";
  }
  return "?";
}

inline Instance parse_instance(const std::string& s) {
  if (s == "n0") return Instance::N0;
  if (s == "z") return Instance::Z;
  if (s == "qge0") return Instance::QGE0;
  if (s == "zpoly") return Instance::ZPOLY;
  if (s == "zpolypos") return Instance::ZPOLYPOS;
  if (s == "zxq") return Instance::ZXQ;
  throw ParseError("unknown instance '" + s + "'");
}

inline bool membership(Instance inst, const Poly& v) {
  switch (inst) {
    case Instance::N0:
      return v.is_integer() && v.constant_term() >= 0;
    case Instance::Z:
      return v.is_integer();
    case Instance::QGE0:
      return v.is_constant() && v.constant_term() >= 0;
    case Instance::ZPOLY:
      return v.is_integral();
    case Instance::ZPOLYPOS:
      return v.is_integral() && (v.is_zero() || v.constant_term() > 0);
    case Instance::ZXQ:
      return v.constant_term().get_den() == 1;
  }
  return false;
}

/// Name of the containing integral domain, for diagnostics.
inline const char* ambient_name(Instance inst) {
  switch (inst) {
    case Instance::N0:
    case Instance::Z: return "Z";
    case Instance::QGE0: return "Q";
    case Instance::ZPOLY:
    case Instance::ZPOLYPOS: return "Z[x]";
    case Instance::ZXQ: return "Q[x]";
  }
  return "?";
}

/// Whether the ambient domain supports certified irreducibility (trial
/// division over Z, Kronecker interpolation over Z[x]). Gates the prime
/// and atom certification paths.
inline bool ambient_is_ufd(Instance inst) {
  switch (inst) {
    case Instance::N0:
    case Instance::Z:
    case Instance::ZPOLY:
    case Instance::ZPOLYPOS: return true;
    case Instance::QGE0:
    case Instance::ZXQ: return false;
  }
  return false;
}

inline bool gcd_available(Instance inst) {
  return inst == Instance::N0 || inst == Instance::Z;
}

inline bool is_mult_unit(Instance inst, const Poly& v) {
  switch (inst) {
    case Instance::N0:
    case Instance::ZPOLYPOS:
      return v == Poly::one();
    case Instance::Z:
    case Instance::ZPOLY:
    case Instance::ZXQ:
      return v == Poly::one() || v == Poly(-1);
    case Instance::QGE0:
      return !v.is_zero();
  }
  return false;
}

inline bool is_add_invertible(Instance inst, const Poly& v) {
  switch (inst) {
    case Instance::N0:
    case Instance::QGE0:
    case Instance::ZPOLYPOS:
      return v.is_zero();
    case Instance::Z:
    case Instance::ZPOLY:
    case Instance::ZXQ:
      return true;  // ring instances: -(v) is always a member
  }
  return false;
}

/// A value known to belong to one of the shipped instances.
struct Element {
  Instance inst;
  Poly v;

  friend bool operator==(const Element& a, const Element& b) {
    return a.inst == b.inst && a.v == b.v;
  }
};

inline Element make_element(Instance inst, Poly v) {
  if (!membership(inst, v))
    throw DomainError(to_string(v) + " is not a member of " +
                      std::string(to_string(inst)));
  return Element{inst, std::move(v)};
}

inline Element parse_element(Instance inst, const std::string& s) {
  return make_element(inst, parse_poly(s));
}

inline void require_same_instance(const Element& a, const Element& b) {
  if (a.inst != b.inst)
    throw DomainError("instance mismatch: " + std::string(to_string(a.inst)) +
                      " vs " + to_string(b.inst));
}

enum class ArithOp { Add, Mul };

inline Element arithmetic(ArithOp op, const Element& a, const Element& b) {
  require_same_instance(a, b);
  Poly r = op == ArithOp::Add ? a.v + b.v : a.v * b.v;
  return make_element(a.inst, std::move(r));
}

struct UnitClass {
  bool mult_unit = false;
  bool add_invertible = false;
};

inline UnitClass classify_units(const Element& a) {
  return {is_mult_unit(a.inst, a.v), is_add_invertible(a.inst, a.v)};
}

/// Additively-reduced predicate. The shipped instances all admit an analytic
/// argument, so the verdict is never Unknown here.
inline Verdict is_additively_reduced(Instance inst) {
  switch (inst) {
    case Instance::N0:
      return Verdict::yes("no nonzero natural has a negative");
    case Instance::QGE0:
      return Verdict::yes("no nonzero nonnegative rational has a negative");
    case Instance::ZPOLYPOS:
      return Verdict::yes("f(0) > 0 excludes -f");
    case Instance::Z:
      return Verdict::no("witness s=1, -1 in Z");
    case Instance::ZPOLY:
      return Verdict::no("witness s=1, -1 in Z[x]");
    case Instance::ZXQ:
      return Verdict::no("witness s=x, -x has integer constant term 0");
  }
  return Verdict::unknown({});
}

/// Quotient b / a when a divides b in the instance, i.e. the ambient
/// quotient exists and is itself a member. The ambient is an integral
/// domain, so the quotient is unique and divisibility is decidable.
inline std::optional<Poly> try_divide(Instance inst, const Poly& a,
                                      const Poly& b) {
  if (a.is_zero()) throw DomainError("division by zero");
  auto q = b.div_exact(a);
  if (!q || !membership(inst, *q)) return std::nullopt;
  return q;
}

/// Image of (a, b) under the Grothendieck-group embedding, realized as
/// the ambient difference a - b.
inline Poly groth_embed(const Element& a, const Element& b) {
  require_same_instance(a, b);
  return a.v - b.v;
}

}  // namespace semidom

#endif  // SEMIDOM_INSTANCE_HPP
