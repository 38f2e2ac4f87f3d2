#ifndef SEMIDOM_NUMUTIL_HPP
#define SEMIDOM_NUMUTIL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "semidom/poly.hpp"

namespace semidom {

/// Trial-division factorization of n >= 1 into (prime, exponent) pairs.
/// Fully certified for the desk-scale magnitudes used here.
inline std::vector<std::pair<mpz_class, int>> factor_integer(mpz_class n) {
  if (n < 1) throw DomainError("factor_integer requires n >= 1");
  std::vector<std::pair<mpz_class, int>> out;
  for (mpz_class p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime_trial(const mpz_class& n) {
  if (n < 2) return false;
  for (mpz_class p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) return false;
  return true;
}

/// All positive divisors of n >= 1, ascending.
inline std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factor_integer(n)) {
    std::size_t sz = out.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace semidom

#endif  // SEMIDOM_NUMUTIL_HPP
