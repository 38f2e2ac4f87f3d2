#ifndef SEMIDOM_VERDICT_HPP
#define SEMIDOM_VERDICT_HPP

#include <string>

namespace semidom {

enum class Answer { Yes, No, Unknown };

inline const char* to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "YES";
    case Answer::No: return "NO";
    default: return "UNKNOWN";
  }
}

/// Caps for bounded searches. Recorded in every Unknown verdict so that
/// negative results are reproducible.
struct Budget {
  int degree_cap = 6;          // max polynomial degree in searches
  long height_cap = 50;        // max |coefficient|
  long pair_cap = 20000;       // candidate pairs for refutation searches
  long divisor_cap = 100000;   // divisor tuples in Kronecker interpolation
  int summand_cap = 6;         // summands in ideal-membership witnesses
  long coeff_height_cap = 32;  // coefficient height in membership witnesses
  int exponent_cap = 64;       // per-generator exponent in mult-set searches
  long enum_cap = 500;         // enumerated factorizations per element

  Budget scaled(double f) const {
    auto sc = [f](auto v) {
      double x = static_cast<double>(v) * f;
      return static_cast<decltype(v)>(x < 1 ? 1 : x);
    };
    Budget b = *this;
    b.degree_cap = sc(degree_cap);
    b.height_cap = sc(height_cap);
    b.pair_cap = sc(pair_cap);
    b.divisor_cap = sc(divisor_cap);
    b.summand_cap = sc(summand_cap);
    b.coeff_height_cap = sc(coeff_height_cap);
    b.exponent_cap = sc(exponent_cap);
    b.enum_cap = sc(enum_cap);
    return b;
  }

  std::string describe() const {
    return "degree<=" + std::to_string(degree_cap) +
           ",height<=" + std::to_string(height_cap) +
           ",pairs<=" + std::to_string(pair_cap) +
           ",exponent<=" + std::to_string(exponent_cap);
  }
};

/// Three-valued answer for predicates that are undecidable in general.
/// Yes/No carry a re-verifiable witness or certificate description;
/// Unknown records the budget that was exhausted.
struct Verdict {
  Answer answer = Answer::Unknown;
  std::string witness;  // decomposition, counterexample, or certificate
  Budget budget_used;

  static Verdict yes(std::string w) { return {Answer::Yes, std::move(w), {}}; }
  static Verdict no(std::string w) { return {Answer::No, std::move(w), {}}; }
  static Verdict unknown(const Budget& b) { return {Answer::Unknown, "", b}; }

  bool is_yes() const { return answer == Answer::Yes; }
  bool is_no() const { return answer == Answer::No; }
  bool is_unknown() const { return answer == Answer::Unknown; }

  std::string render() const {
    switch (answer) {
      case Answer::Yes: return "YES(" + witness + ")";
      case Answer::No: return "NO(" + witness + ")";
      default: return "UNKNOWN(" + budget_used.describe() + ")";
    }
  }
};

}  // namespace semidom

#endif  // SEMIDOM_VERDICT_HPP
