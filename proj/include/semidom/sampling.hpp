#ifndef SEMIDOM_SAMPLING_HPP
#define SEMIDOM_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "semidom/instance.hpp"
#include "semidom/poly.hpp"

namespace semidom {

/// Seeded generator for property sampling. mt19937_64 plus modulo
/// reduction is fully specified by the standard, so identical seeds give
/// identical samples on every platform. (std::uniform_int_distribution
/// is implementation-defined and deliberately avoided.)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  long uniform(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
};

/// Random member of the instance with bounded degree and coefficient
/// height. Nonzero unless allow_zero.
inline Element sample_element(Instance inst, Rng& rng, int max_degree = 3,
                              long max_height = 20, bool allow_zero = true) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Poly p;
    switch (inst) {
      case Instance::N0:
        p = Poly(mpq_class(rng.uniform(0, max_height)));
        break;
      case Instance::Z:
        p = Poly(mpq_class(rng.uniform(-max_height, max_height)));
        break;
      case Instance::QGE0: {
        mpq_class q(rng.uniform(0, max_height), rng.uniform(1, max_height));
        q.canonicalize();
        p = Poly(q);
        break;
      }
      case Instance::ZPOLY:
      case Instance::ZPOLYPOS:
      case Instance::ZXQ: {
        int deg = static_cast<int>(rng.uniform(0, max_degree));
        std::vector<mpq_class> c(deg + 1);
        for (auto& x : c) x = rng.uniform(-max_height, max_height);
        if (inst == Instance::ZPOLYPOS) c[0] = rng.uniform(1, max_height);
        if (inst == Instance::ZXQ)
          for (std::size_t i = 1; i < c.size(); ++i)
            c[i] /= rng.uniform(1, 4);
        p = Poly(std::move(c));
        break;
      }
    }
    if (!allow_zero && p.is_zero()) continue;
    if (membership(inst, p)) return Element{inst, p};
  }
  return Element{inst, Poly::one()};
}

/// Deterministic graded enumeration of small members, used by the
/// bounded refutation searches. Order: degree, then canonical
/// coefficient order.
inline std::vector<Poly> enumerate_small_elements(Instance inst,
                                                  int degree_cap,
                                                  long height_cap,
                                                  std::size_t count_cap = 100000) {
  std::vector<Poly> out;
  if (inst == Instance::N0 || inst == Instance::Z || inst == Instance::QGE0) {
    for (long n = 0; n <= height_cap && out.size() < count_cap; ++n) {
      out.emplace_back(mpq_class(n));
      if (inst == Instance::Z && n > 0) out.emplace_back(mpq_class(-n));
    }
    return out;
  }
  // polynomial instances: integer coefficients only (for ZXQ this is the
  // integer-polynomial slice, enough for the shipped searches)
  for (int deg = 0; deg <= degree_cap && out.size() < count_cap; ++deg) {
    std::vector<long> idx(deg + 1, -height_cap);
    bool done = false;
    while (!done && out.size() < count_cap) {
      if (deg == 0 || idx[deg] != 0) {
        std::vector<mpq_class> coeffs(idx.begin(), idx.end());
        Poly p{std::move(coeffs)};
        if (p.degree() == deg && membership(inst, p)) out.push_back(std::move(p));
      }
      int i = 0;
      while (i <= deg && ++idx[i] > height_cap) {
        idx[i] = -height_cap;
        ++i;
      }
      if (i > deg) done = true;
    }
  }
  return out;
}

}  // namespace semidom

#endif  // SEMIDOM_SAMPLING_HPP
