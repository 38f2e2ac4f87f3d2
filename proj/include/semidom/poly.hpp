#ifndef SEMIDOM_POLY_HPP
#define SEMIDOM_POLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace semidom {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense univariate polynomial with exact rational coefficients.
/// This is the ambient value type for every shipped semidomain: integers
/// and rationals are degree-0 polynomials. Canonical form strips trailing
/// zero coefficients, so equality is structural.
class Poly {
 public:
  Poly() = default;
  Poly(const mpq_class& c) {  // NOLINT
    coeffs_.push_back(c);
    coeffs_.back().canonicalize();
    normalize();
  }
  Poly(long c) : Poly(mpq_class(c)) {}                             // NOLINT
  explicit Poly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
  }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(1); }
  /// x^k with rational coefficient c.
  static Poly monomial(const mpq_class& c, std::size_t k) {
    std::vector<mpq_class> v(k + 1, mpq_class(0));
    v[k] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  mpq_class coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : mpq_class(0);
  }
  mpq_class constant_term() const { return coeff(0); }
  mpq_class leading() const {
    return coeffs_.empty() ? mpq_class(0) : coeffs_.back();
  }

  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_integral() const {
    for (const auto& c : coeffs_)
      if (c.get_den() != 1) return false;
    return true;
  }
  bool is_integer() const { return is_constant() && is_integral(); }

  /// Largest absolute value among numerators and denominators.
  mpz_class height() const {
    mpz_class h = 0;
    for (const auto& c : coeffs_) {
      mpz_class n = abs(c.get_num());
      if (n > h) h = n;
      if (c.get_den() > h) h = c.get_den();
    }
    return h;
  }

  mpq_class eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<mpq_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()),
                             mpq_class(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<mpq_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()),
                             mpq_class(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a) { return Poly::zero() - a; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    std::vector<mpq_class> v(a.coeffs_.size() + b.coeffs_.size() - 1,
                             mpq_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Total order: degree first, then coefficients from the constant term
  /// up. Used for canonical sorting of atom multisets.
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
      int c = cmp(a.coeffs_[i], b.coeffs_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  /// Exact quotient in Q[x], or nullopt when the remainder is nonzero.
  std::optional<Poly> div_exact(const Poly& d) const {
    if (d.is_zero()) throw DomainError("division by zero polynomial");
    if (is_zero()) return Poly::zero();
    if (degree() < d.degree()) return std::nullopt;
    std::vector<mpq_class> rem = coeffs_;
    std::vector<mpq_class> quot(coeffs_.size() - d.coeffs_.size() + 1,
                                mpq_class(0));
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
      mpq_class q = rem[i + d.degree()] / d.leading();
      quot[i] = q;
      if (q != 0)
        for (std::size_t j = 0; j < d.coeffs_.size(); ++j)
          rem[i + j] -= q * d.coeffs_[j];
    }
    for (int i = 0; i < d.degree(); ++i)
      if (rem[i] != 0) return std::nullopt;
    return Poly(std::move(quot));
  }

  /// gcd of integer coefficients (0 for the zero polynomial). Requires
  /// an integral polynomial.
  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
      if (c.get_den() != 1) throw DomainError("content of non-integral poly");
      mpz_class n = abs(c.get_num());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    return g;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<mpq_class> coeffs_;
};

namespace detail {

inline std::string rat_to_string(const mpq_class& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

}  // namespace detail

/// Ascending-degree text form: "2+x-x^2", rational coefficients as "n/d",
/// e.g. "1/2+3/4x". Inverse of parse_poly.
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    mpq_class c = p.coeff(i);
    if (c == 0) continue;
    if (!out.empty() && c > 0) out += "+";
    if (i == 0) {
      out += detail::rat_to_string(c);
    } else {
      if (c == -1)
        out += "-";
      else if (c != 1)
        out += detail::rat_to_string(c);
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

/// Parser for the polynomial text syntax. Accepts ASCII '-' and the
/// UTF-8 minus sign; whitespace is ignored.
inline Poly parse_poly(const std::string& input) {
  std::string s;
  for (std::size_t i = 0; i < input.size(); ++i) {
    unsigned char c = input[i];
    if (c == ' ' || c == '\t') continue;
    // U+2212 minus sign
    if (c == 0xE2 && i + 2 < input.size() &&
        static_cast<unsigned char>(input[i + 1]) == 0x88 &&
        static_cast<unsigned char>(input[i + 2]) == 0x92) {
      s += '-';
      i += 2;
      continue;
    }
    s += static_cast<char>(c);
  }
  if (s.empty()) throw ParseError("empty polynomial literal");

  std::size_t pos = 0;
  auto peek = [&]() -> char { return pos < s.size() ? s[pos] : '\0'; };
  auto digits = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start)
      throw ParseError("expected digits at '" + s.substr(start) + "'");
    return s.substr(start, pos - start);
  };

  Poly result;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      if (peek() == '-') sign = -1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' at '" + s.substr(pos) + "'");
    }
    first = false;

    mpq_class coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      if (peek() == '/') {
        ++pos;
        den = digits();
      }
      coeff = mpq_class(mpz_class(num), mpz_class(den));
      if (coeff.get_den() == 0) throw ParseError("zero denominator in '" + num + "/" + den + "'");
      coeff.canonicalize();
      have_coeff = true;
    }
    if (peek() == '*') ++pos;

    std::size_t exp = 0;
    if (peek() == 'x') {
      ++pos;
      exp = 1;
      if (peek() == '^') {
        ++pos;
        exp = std::stoul(digits());
        if (exp > 64) throw ParseError("exponent too large");
      }
    } else if (!have_coeff) {
      throw ParseError("expected term at '" + s.substr(pos) + "'");
    }
    result = result + Poly::monomial(sign * coeff, exp);
  }
  return result;
}

}  // namespace semidom

#endif  // SEMIDOM_POLY_HPP
