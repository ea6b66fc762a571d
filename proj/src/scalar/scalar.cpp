#include "homcheck/scalar/scalar.hpp"

#include <algorithm>

#include "homcheck/errors.hpp"

namespace homcheck {

namespace {

BigInt lcm_int(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace

Scalar::Scalar(const Rational& r) : num_(boost::multiprecision::numerator(r)) {
  den_content_ = boost::multiprecision::denominator(r);
}

Scalar Scalar::fraction(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw DomainError("fraction with zero denominator");
  Scalar s(num);
  int sign = s.absorb_into_denominator(den);
  if (sign < 0) s.num_ = -s.num_;
  s.normalize();
  return s;
}

Scalar Scalar::sym(std::string_view name) { return Scalar(MultiPoly::var(Symbols::index(name))); }

int Scalar::absorb_into_denominator(MultiPoly p) {
  int sign = 1;
  if (p.leading().coeff < 0) {
    p = -p;
    sign = -1;
  }
  BigInt c = p.content();
  if (c != 1) {
    den_content_ *= c;
    p = p.divided_exact(c);
  }
  Monomial m = p.monomial_content();
  if (!m.is_one()) {
    den_mono_ = den_mono_ * m;
    p = p.divided_exact(m);
  }
  if (p.is_constant()) return sign;  // p == 1 now
  for (auto& f : den_factors_) {
    while (true) {
      auto quot = p.try_divide(f.poly);
      if (!quot) break;
      ++f.exp;
      p = std::move(*quot);
      if (p.is_constant()) return sign;
    }
  }
  den_factors_.push_back({std::move(p), 1});
  return sign;
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_content_ = 1;
    den_mono_ = Monomial{};
    den_factors_.clear();
    return;
  }
  for (auto& f : den_factors_) {
    while (f.exp > 0) {
      auto quot = num_.try_divide(f.poly);
      if (!quot) break;
      num_ = std::move(*quot);
      --f.exp;
    }
  }
  std::erase_if(den_factors_, [](const Factor& f) { return f.exp == 0; });

  if (!den_mono_.is_one()) {
    Monomial g = Monomial::gcd(num_.monomial_content(), den_mono_);
    if (!g.is_one()) {
      num_ = num_.divided_exact(g);
      den_mono_ = den_mono_ / g;
    }
  }
  if (den_content_ != 1) {
    BigInt g = boost::multiprecision::gcd(num_.content(), den_content_);
    if (g != 1) {
      num_ = num_.divided_exact(g);
      den_content_ /= g;
    }
  }
}

bool Scalar::same_denominator(const Scalar& o) const {
  if (den_content_ != o.den_content_ || den_mono_ != o.den_mono_ ||
      den_factors_.size() != o.den_factors_.size())
    return false;
  for (std::size_t i = 0; i < den_factors_.size(); ++i)
    if (den_factors_[i].exp != o.den_factors_[i].exp ||
        !(den_factors_[i].poly == o.den_factors_[i].poly))
      return false;
  return true;
}

bool Scalar::is_one() const { return num_ == denominator(); }

bool Scalar::is_integer() const {
  return num_.is_constant() && den_content_ == 1 && den_mono_.is_one() && den_factors_.empty();
}

bool Scalar::is_monomial() const { return num_.is_monomial() && den_factors_.empty(); }

MultiPoly Scalar::denominator() const {
  MultiPoly d = MultiPoly::monomial(den_mono_, den_content_);
  for (const auto& f : den_factors_) d = d * f.poly.pow(f.exp);
  return d;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  Scalar r;
  if (same_denominator(o)) {
    r = *this;
    r.num_ = num_ + o.num_;
    r.normalize();
    return r;
  }
  // Common denominator built factor by factor (max multiplicity), so that
  // repeated sums over the same factors do not blow up.
  r.den_content_ = lcm_int(den_content_, o.den_content_);
  r.den_mono_ = Monomial::lcm(den_mono_, o.den_mono_);
  r.den_factors_ = den_factors_;
  for (const auto& f : o.den_factors_) {
    auto it = std::find_if(r.den_factors_.begin(), r.den_factors_.end(),
                           [&](const Factor& g) { return g.poly == f.poly; });
    if (it == r.den_factors_.end())
      r.den_factors_.push_back(f);
    else
      it->exp = std::max(it->exp, f.exp);
  }
  auto lift = [&r](const Scalar& s) {
    MultiPoly p = s.num_.scaled(r.den_content_ / s.den_content_).times(r.den_mono_ / s.den_mono_);
    for (const auto& f : r.den_factors_) {
      unsigned have = 0;
      for (const auto& g : s.den_factors_)
        if (g.poly == f.poly) have = g.exp;
      if (f.exp > have) p = p * f.poly.pow(f.exp - have);
    }
    return p;
  };
  r.num_ = lift(*this) + lift(o);
  r.normalize();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return {};
  Scalar r;
  r.num_ = num_ * o.num_;
  r.den_content_ = den_content_ * o.den_content_;
  r.den_mono_ = den_mono_ * o.den_mono_;
  r.den_factors_ = den_factors_;
  for (const auto& f : o.den_factors_) {
    auto it = std::find_if(r.den_factors_.begin(), r.den_factors_.end(),
                           [&](const Factor& g) { return g.poly == f.poly; });
    if (it == r.den_factors_.end())
      r.den_factors_.push_back(f);
    else
      it->exp += f.exp;
  }
  r.normalize();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero scalar");
  Scalar r(denominator());
  int sign = r.absorb_into_denominator(num_);
  if (sign < 0) r.num_ = -r.num_;
  r.normalize();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar result(1), base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  if (same_denominator(o)) return num_ == o.num_;
  return num_ * o.denominator() == o.num_ * denominator();
}

Rational Scalar::eval_at(const std::map<std::size_t, Rational>& point) const {
  Rational den = denominator().evaluate(point);
  if (den == 0) throw DenominatorVanishes("denominator " + denominator().to_string() +
                                         " vanishes at the given point");
  return num_.evaluate(point) / den;
}

Rational Scalar::eval_at(const std::map<std::string, Rational>& point) const {
  std::map<std::size_t, Rational> byindex;
  for (const auto& [name, value] : point) {
    auto idx = Symbols::find(name);
    if (idx) byindex.emplace(*idx, value);
  }
  return eval_at(byindex);
}

Scalar Scalar::substitute(const std::map<std::size_t, Rational>& point) const {
  auto [np, nd] = num_.substitute(point);
  auto [dp, dd] = denominator().substitute(point);
  if (dp.is_zero())
    throw DenominatorVanishes("denominator " + denominator().to_string() +
                              " vanishes under substitution");
  return fraction(np.scaled(dd), dp.scaled(nd));
}

std::string Scalar::to_string() const {
  if (den_content_ == 1 && den_mono_.is_one() && den_factors_.empty()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + denominator().to_string() + ")";
}

// ---------------------------------------------------------------------------

Scalar qint(long long n) {
  if (n < 0) return -qint(-n);
  if (n == 0) return {};
  // [n] = (q^{2n-2} + q^{2n-4} + ... + 1) / q^{n-1}
  MultiPoly num;
  for (long long j = 0; j < n; ++j) num += MultiPoly::var(0, static_cast<unsigned>(2 * j));
  return Scalar::fraction(num, MultiPoly::var(0, static_cast<unsigned>(n - 1)));
}

Scalar qint(long long n, const Scalar& q) {
  if (n < 0) return -qint(-n, q);
  Scalar r;
  for (long long j = 0; j < n; ++j) r += q.pow(n - 1 - 2 * j);
  return r;
}

Scalar qfact(long long n) {
  if (n < 0) throw DomainError("qfact of a negative integer");
  Scalar r(1);
  for (long long i = 2; i <= n; ++i) r *= qint(i);
  return r;
}

Scalar qbinom(long long n, long long r) {
  if (n < 0 || r < 0 || r > n) throw DomainError("qbinom requires 0 <= r <= n");
  return qfact(n) / (qfact(r) * qfact(n - r));
}

}  // namespace homcheck
