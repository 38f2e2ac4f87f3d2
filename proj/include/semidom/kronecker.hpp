#ifndef SEMIDOM_KRONECKER_HPP
#define SEMIDOM_KRONECKER_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "semidom/numutil.hpp"
#include "semidom/poly.hpp"
#include "semidom/verdict.hpp"

namespace semidom {

/// Certified factorization of a nonzero integer polynomial:
///   sign * content * prod(irreducibles) == input,
/// with every listed factor irreducible in Z[x], primitive, and of
/// positive leading coefficient. Returned only when the divisor search
/// provably exhausted within budget.
struct KroneckerResult {
  int sign = 1;
  mpz_class content = 1;
  std::vector<Poly> irreducibles;  // canonically sorted
};

namespace detail {

inline Poly lagrange_interpolate(const std::vector<long>& xs,
                                 const std::vector<mpz_class>& ys) {
  Poly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis(1);
    mpq_class denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly(std::vector<mpq_class>{mpq_class(-xs[j]), 1});
      denom *= mpq_class(xs[i] - xs[j]);
    }
    acc = acc + basis * Poly(mpq_class(ys[i]) / denom);
  }
  return acc;
}

/// Evaluation points 0, 1, -1, 2, -2, ...
inline long eval_point(int k) { return k % 2 == 1 ? (k + 1) / 2 : -(k / 2); }

/// Finds one nontrivial divisor of degree exactly d of the primitive
/// polynomial p (no integer roots, degree > d). Exhaustive over divisor
/// tuples; returns nullopt if none exists, throws via flag on budget.
inline std::optional<Poly> kronecker_divisor(const Poly& p, int d,
                                             long& tuple_budget) {
  std::vector<long> xs;
  std::vector<std::vector<mpz_class>> divisor_lists;
  for (int k = 0; static_cast<int>(xs.size()) < d + 1; ++k) {
    long x = eval_point(k);
    mpz_class v = p.eval(mpq_class(x)).get_num();
    if (v == 0) continue;  // integer roots were already stripped
    xs.push_back(x);
    auto divs = positive_divisors(abs(v));
    std::vector<mpz_class> with_sign;
    if (xs.size() == 1) {
      with_sign = divs;  // fix the sign of the first value: g vs -g
    } else {
      for (const auto& t : divs) {
        with_sign.push_back(t);
        with_sign.push_back(-t);
      }
    }
    divisor_lists.push_back(std::move(with_sign));
  }

  std::vector<std::size_t> idx(divisor_lists.size(), 0);
  std::vector<mpz_class> ys(divisor_lists.size());
  while (true) {
    if (--tuple_budget < 0) return std::nullopt;
    for (std::size_t i = 0; i < idx.size(); ++i) ys[i] = divisor_lists[i][idx[i]];
    Poly cand = lagrange_interpolate(xs, ys);
    if (cand.degree() == d && cand.is_integral()) {
      if (cand.leading() < 0) cand = -cand;
      if (auto q = p.div_exact(cand); q && q->is_integral()) return cand;
    }
    // odometer
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == divisor_lists[i].size()) {
      idx[i] = 0;
      ++i;
    }
    if (i == idx.size()) return std::nullopt;
  }
}

}  // namespace detail

/// Kronecker interpolation factorization over Z[x]. Returns nullopt when
/// the input exceeds the degree/height caps or the divisor-tuple budget
/// runs out; never guesses.
inline std::optional<KroneckerResult> kronecker_factor(const Poly& f,
                                                       const Budget& budget = {}) {
  if (f.is_zero()) throw DomainError("kronecker_factor of zero");
  if (!f.is_integral()) throw DomainError("kronecker_factor needs Z[x] input");
  if (f.degree() > budget.degree_cap || f.height() > budget.height_cap)
    return std::nullopt;

  KroneckerResult res;
  Poly p = f;
  if (p.leading() < 0) {
    res.sign = -1;
    p = -p;
  }
  res.content = p.content();
  if (res.content > 1) {
    auto q = p.div_exact(Poly(mpq_class(res.content)));
    p = *q;
  }

  // x^k factors
  while (!p.is_zero() && p.degree() > 0 && p.constant_term() == 0) {
    res.irreducibles.push_back(Poly::monomial(1, 1));
    p = *p.div_exact(Poly::monomial(1, 1));
  }

  // rational roots -> primitive linear factors (q x - p), p/q a root
  if (p.degree() > 0) {
    bool found = true;
    while (found && p.degree() > 0) {
      found = false;
      mpz_class c0 = abs(p.constant_term().get_num());
      mpz_class lead = p.leading().get_num();
      for (const auto& pn : positive_divisors(c0)) {
        for (const auto& qd : positive_divisors(lead)) {
          if (gcd(pn, qd) != 1) continue;
          for (int sgn : {1, -1}) {
            mpq_class r(sgn * pn, qd);
            r.canonicalize();
            while (p.degree() > 0 && p.eval(r) == 0) {
              Poly lin(std::vector<mpq_class>{mpq_class(-r.get_num()),
                                              mpq_class(r.get_den())});
              p = *p.div_exact(lin);
              res.irreducibles.push_back(lin);
              found = true;
            }
          }
          if (found) break;
        }
        if (found) break;  // coefficients changed; recompute divisors
      }
    }
  }

  long tuple_budget = budget.divisor_cap;
  int d = 2;
  while (p.degree() >= 2 * d) {
    auto g = detail::kronecker_divisor(p, d, tuple_budget);
    if (tuple_budget < 0) return std::nullopt;
    if (g) {
      res.irreducibles.push_back(*g);
      p = *p.div_exact(*g);
      if (p.leading() < 0) throw DomainError("internal: sign drift");
    } else {
      ++d;
    }
  }
  if (p.degree() > 0) res.irreducibles.push_back(p);

  std::sort(res.irreducibles.begin(), res.irreducibles.end());
  return res;
}

/// Certified irreducibility over Z[x] (content 1, degree >= 1 input).
inline std::optional<bool> is_irreducible_zx(const Poly& f,
                                             const Budget& budget = {}) {
  auto r = kronecker_factor(f, budget);
  if (!r) return std::nullopt;
  return r->content == 1 && r->irreducibles.size() == 1;
}

}  // namespace semidom

#endif  // SEMIDOM_KRONECKER_HPP
