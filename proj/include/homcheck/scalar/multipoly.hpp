#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homcheck/scalar/symbols.hpp"

namespace homcheck {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent vector over the symbol table. Comparison is lexicographic with
/// symbol 0 (`q`) most significant.
struct Monomial {
  std::array<std::uint16_t, Symbols::kMax> exp{};

  static Monomial var(std::size_t index, unsigned power = 1);

  unsigned degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

/// Sparse commutative polynomial with integer coefficients. Terms are kept
/// sorted by decreasing monomial and never carry a zero coefficient.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    BigInt coeff;
    bool operator==(const Term&) const = default;
  };

  MultiPoly() = default;
  MultiPoly(long long c);  // NOLINT: integers are polynomials
  MultiPoly(const BigInt& c);
  static MultiPoly monomial(const Monomial& m, BigInt c = 1);
  static MultiPoly var(std::size_t index, unsigned power = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const BigInt& c) const;
  MultiPoly times(const Monomial& m) const;
  /// Exact division by an integer that divides every coefficient.
  MultiPoly divided_exact(const BigInt& c) const;
  /// Requires `m` to divide every term.
  MultiPoly divided_exact(const Monomial& m) const;
  /// Quotient when `divisor` divides `*this` exactly over the integers.
  std::optional<MultiPoly> try_divide(const MultiPoly& divisor) const;

  MultiPoly pow(unsigned n) const;

  /// Positive gcd of the coefficients (0 for the zero polynomial).
  BigInt content() const;
  /// Gcd of all term monomials.
  Monomial monomial_content() const;

  Rational evaluate(const std::map<std::size_t, Rational>& point) const;
  /// Substitutes the given symbols by rationals; result as num/den pair.
  std::pair<MultiPoly, BigInt> substitute(const std::map<std::size_t, Rational>& point) const;

  std::string to_string() const;

  bool operator==(const MultiPoly&) const = default;

 private:
  explicit MultiPoly(std::vector<Term> terms) : terms_(std::move(terms)) {}
  static MultiPoly from_unsorted(std::vector<Term> terms);

  std::vector<Term> terms_;
};

}  // namespace homcheck
