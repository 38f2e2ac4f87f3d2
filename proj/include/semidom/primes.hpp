#ifndef SEMIDOM_PRIMES_HPP
#define SEMIDOM_PRIMES_HPP

#include <optional>
#include <string>

#include "semidom/instance.hpp"
#include "semidom/kronecker.hpp"
#include "semidom/numutil.hpp"

namespace semidom {

/// Certification that p is a prime element of its instance, via ambient
/// irreducibility plus the instance's normalization argument:
///   N0, Z      - trial-division primality in Z;
///   ZPOLY      - Kronecker irreducibility in Z[x] (constants: +-prime);
///   ZPOLYPOS   - Kronecker irreducibility; 0 < quotient constant terms
///                keep quotients inside the instance, so Z[x]-primality
///                descends.
/// Returns the certificate text on success, nullopt when no certificate
/// applies (including budget exhaustion). Never refutes.
inline std::optional<std::string> certify_prime(Instance inst, const Poly& p,
                                                const Budget& budget = {}) {
  if (p.is_zero() || is_mult_unit(inst, p)) return std::nullopt;
  switch (inst) {
    case Instance::N0:
    case Instance::Z: {
      mpz_class n = abs(p.constant_term().get_num());
      if (is_prime_trial(n))
        return "trial division: " + n.get_str() + " is prime in Z";
      return std::nullopt;
    }
    case Instance::ZPOLY:
    case Instance::ZPOLYPOS: {
      if (p.is_constant()) {
        mpz_class n = abs(p.constant_term().get_num());
        if (is_prime_trial(n))
          return "constant " + n.get_str() + " is prime in Z";
        return std::nullopt;
      }
      if (!p.is_integral()) return std::nullopt;
      if (p.content() != 1) return std::nullopt;
      auto irr = is_irreducible_zx(p, budget);
      if (irr && *irr)
        return "Kronecker-certified irreducible in Z[x]" +
               std::string(inst == Instance::ZPOLYPOS
                               ? "; positive constant terms close quotients"
                               : "");
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace semidom

#endif  // SEMIDOM_PRIMES_HPP
