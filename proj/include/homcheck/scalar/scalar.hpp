#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homcheck/scalar/multipoly.hpp"

namespace homcheck {

/// Exact element of the rational function field Q(q, params...).
///
/// Stored as numerator / (content * monomial * prod f_i^{e_i}) where each f_i
/// is a primitive, non-monomial polynomial with positive leading coefficient.
/// Fractions are never GCD-reduced; after every operation the integer content
/// and monomial part are cancelled and the numerator is trial-divided by the
/// known denominator factors. Equality is decided by cross-multiplication, so
/// two equal values may print differently.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long c) : num_(c) {}  // NOLINT: integer literals are scalars
  Scalar(const BigInt& c) : num_(c) {}
  explicit Scalar(const Rational& r);
  explicit Scalar(MultiPoly num) : num_(std::move(num)) {}
  static Scalar fraction(const MultiPoly& num, const MultiPoly& den);

  /// The indeterminate `name` (declared in the symbol table if new).
  static Scalar sym(std::string_view name);
  static Scalar q() { return sym("q"); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// True when the value is an integer constant.
  bool is_integer() const;
  /// True when the value is c * monomial / monomial (a "Laurent monomial").
  bool is_monomial() const;

  const MultiPoly& numerator() const { return num_; }
  /// The expanded denominator; its leading coefficient is positive.
  MultiPoly denominator() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws DomainError on division by zero.
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  /// Integer power; negative exponents require a nonzero value.
  Scalar pow(long long n) const;

  /// Cross-multiplication equality: a/b == c/d iff ad == cb.
  bool operator==(const Scalar& o) const;

  /// Exact value at a rational point. Every symbol occurring in the value
  /// must be assigned. Throws DenominatorVanishes if the denominator is zero.
  Rational eval_at(const std::map<std::size_t, Rational>& point) const;
  Rational eval_at(const std::map<std::string, Rational>& point) const;
  /// Partial instantiation: symbols in `point` are replaced, others kept.
  Scalar substitute(const std::map<std::size_t, Rational>& point) const;

  /// Textual form, e.g. `(q^2+1)/(q)`, `q+1`, `-3`.
  std::string to_string() const;

 private:
  struct Factor {
    MultiPoly poly;
    unsigned exp;
  };

  void normalize();
  /// Multiplies the denominator by `p` (nonzero); returns the sign (+1/-1)
  /// that must be pushed into the numerator.
  int absorb_into_denominator(MultiPoly p);
  bool same_denominator(const Scalar& o) const;

  MultiPoly num_;
  BigInt den_content_ = 1;
  Monomial den_mono_;
  std::vector<Factor> den_factors_;
};

/// Symmetric q-integer [n]_q = (q^n - q^{-n}) / (q - q^{-1}).
Scalar qint(long long n);
/// [n] at another value of q (q^{n-1} + q^{n-3} + ... + q^{1-n}).
Scalar qint(long long n, const Scalar& q);
/// [n]_q! ; throws DomainError for n < 0.
Scalar qfact(long long n);
/// q-binomial [n r]_q ; throws DomainError unless 0 <= r <= n.
Scalar qbinom(long long n, long long r);

}  // namespace homcheck
