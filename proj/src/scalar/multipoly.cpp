#include "homcheck/scalar/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "homcheck/errors.hpp"

namespace homcheck {

Monomial Monomial::var(std::size_t index, unsigned power) {
  if (index >= Symbols::kMax) throw DomainError("symbol index out of range");
  Monomial m;
  m.exp[index] = static_cast<std::uint16_t>(power);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    unsigned e = unsigned(exp[i]) + other.exp[i];
    if (e > 0xFFFFu) throw DomainError("exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(e);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = exp[i] - other.exp[i];
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < a.exp.size(); ++i) r.exp[i] = std::min(a.exp[i], b.exp[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < a.exp.size(); ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(long long c) {
  if (c != 0) terms_.push_back({Monomial{}, BigInt(c)});
}

MultiPoly::MultiPoly(const BigInt& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

MultiPoly MultiPoly::monomial(const Monomial& m, BigInt c) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({m, std::move(c)});
  return p;
}

MultiPoly MultiPoly::var(std::size_t index, unsigned power) {
  return monomial(Monomial::var(index, power));
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

MultiPoly MultiPoly::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return MultiPoly(std::move(out));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae && b != be) {
    if (a->mono > b->mono) {
      out.push_back(*a++);
    } else if (b->mono > a->mono) {
      out.push_back(*b++);
    } else {
      BigInt c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, ae);
  out.insert(out.end(), b, be);
  return MultiPoly(std::move(out));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.terms_.size() == 1) return times(o.terms_[0].mono).scaled(o.terms_[0].coeff);
  if (terms_.size() == 1) return o.times(terms_[0].mono).scaled(terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return from_unsorted(std::move(prod));
}

MultiPoly MultiPoly::scaled(const BigInt& c) const {
  if (c == 0) return {};
  if (c == 1) return *this;
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::times(const Monomial& m) const {
  if (m.is_one()) return *this;
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

MultiPoly MultiPoly::divided_exact(const BigInt& c) const {
  if (c == 1) return *this;
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff /= c;
  return r;
}

MultiPoly MultiPoly::divided_exact(const Monomial& m) const {
  if (m.is_one()) return *this;
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono / m;
  return r;
}

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (is_zero()) return MultiPoly{};
  const Term& lead = divisor.terms_.front();
  // Cheap rejections: every exponent of the divisor's leading monomial must
  // fit under this polynomial's per-variable maxima.
  Monomial maxima;
  for (const auto& t : terms_) maxima = Monomial::lcm(maxima, t.mono);
  if (!lead.mono.divides(maxima)) return std::nullopt;

  MultiPoly rest = *this;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& lt = rest.terms_.front();
    if (!lead.mono.divides(lt.mono)) return std::nullopt;
    BigInt qc, rc;
    boost::multiprecision::divide_qr(lt.coeff, lead.coeff, qc, rc);
    if (rc != 0) return std::nullopt;
    Monomial qm = lt.mono / lead.mono;
    quotient.push_back({qm, qc});
    rest = rest - divisor.times(qm).scaled(qc);
  }
  return MultiPoly(std::move(quotient));  // produced in decreasing order
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result(1), base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

BigInt MultiPoly::content() const {
  BigInt g = 0;
  for (const auto& t : terms_) {
    g = boost::multiprecision::gcd(g, t.coeff);
    if (g == 1) break;
  }
  return g < 0 ? BigInt(-g) : g;
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) g = Monomial::gcd(g, t.mono);
  return g;
}

Rational MultiPoly::evaluate(const std::map<std::size_t, Rational>& point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = Rational(t.coeff);
    for (std::size_t i = 0; i < t.mono.exp.size(); ++i) {
      if (!t.mono.exp[i]) continue;
      auto it = point.find(i);
      if (it == point.end())
        throw DomainError("no value assigned to symbol '" + Symbols::name(i) + "'");
      for (unsigned k = 0; k < t.mono.exp[i]; ++k) v *= it->second;
    }
    sum += v;
  }
  return sum;
}

std::pair<MultiPoly, BigInt> MultiPoly::substitute(
    const std::map<std::size_t, Rational>& point) const {
  // Collect rational coefficients per surviving monomial, then clear
  // denominators with their lcm.
  std::vector<std::pair<Monomial, Rational>> parts;
  BigInt den = 1;
  for (const auto& t : terms_) {
    Rational v = Rational(t.coeff);
    Monomial rest = t.mono;
    for (const auto& [idx, value] : point) {
      for (unsigned k = 0; k < t.mono.exp[idx]; ++k) v *= value;
      rest.exp[idx] = 0;
    }
    BigInt d = boost::multiprecision::denominator(v);
    den = den / boost::multiprecision::gcd(den, d) * d;
    parts.emplace_back(rest, v);
  }
  std::vector<Term> out;
  for (auto& [m, v] : parts)
    out.push_back({m, boost::multiprecision::numerator(v) * (den / boost::multiprecision::denominator(v))});
  return {from_unsorted(std::move(out)), den};
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    BigInt c = t.coeff;
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    first = false;
    bool constant = t.mono.is_one();
    bool wrote = false;
    if (c != 1 || constant) {
      os << c;
      wrote = true;
    }
    for (std::size_t i = 0; i < t.mono.exp.size(); ++i) {
      if (!t.mono.exp[i]) continue;
      if (wrote) os << '*';
      os << Symbols::name(i);
      if (t.mono.exp[i] > 1) os << '^' << t.mono.exp[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace homcheck
