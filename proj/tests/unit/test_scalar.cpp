#include <doctest.h>

#include <random>

#include "homcheck/errors.hpp"
#include "homcheck/scalar/scalar.hpp"

using namespace homcheck;

namespace {

const Scalar q = Scalar::q();

// Random Laurent-ish rational functions in q and one parameter.
Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 3), pick(0, 2);
  Scalar l = Scalar::sym("lam_t");
  Scalar s;
  for (int i = 0; i < 3; ++i) s += Scalar(coeff(rng)) * q.pow(expo(rng) - 1) * l.pow(expo(rng));
  if (pick(rng) == 0) s = s / (q * q - 1 + Scalar(pick(rng)) * l);
  return s;
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1) == Scalar(1));
  CHECK(qint(2) == q + q.inverse());
  CHECK(qint(2) == Scalar::fraction(q.numerator() * q.numerator() + 1, q.numerator()));
  CHECK(qfact(0) == Scalar(1));
  CHECK(qbinom(5, 0) == Scalar(1));
  CHECK(qbinom(2, 1) == q + q.inverse());
  CHECK_THROWS_AS(qbinom(2, 3), DomainError);
  CHECK_THROWS_AS(qfact(-1), DomainError);
  // [n] agrees with the symmetric definition and the recurrence
  for (int n = 0; n <= 20; ++n) {
    CHECK(qint(n + 1) == q * qint(n) + q.pow(-n));
    CHECK(qint(n) == (q.pow(n) - q.pow(-n)) / (q - q.inverse()));
  }
  CHECK(qbinom(4, 2) == qint(4) * qint(3) / (qint(2) * qint(1)));
}

TEST_CASE("evaluation") {
  using R = Rational;
  std::map<std::string, R> at2{{"q", R(2)}};
  CHECK((q + q.inverse()).eval_at(at2) == R(5, 2));
  CHECK(qint(3).eval_at(at2) == R(21, 4));  // 4 + 1 + 1/4
  std::map<std::string, R> at1{{"q", R(1)}};
  CHECK_THROWS_AS((Scalar(1) / (q - q.inverse())).eval_at(at1), DenominatorVanishes);
  CHECK_THROWS_AS(q.eval_at(std::map<std::string, R>{}), DomainError);
}

TEST_CASE("printing") {
  CHECK(Scalar(0).to_string() == "0");
  CHECK((q * q + 1).to_string() == "q^2+1");
  CHECK((-q).to_string() == "-q");
  CHECK(qint(2).to_string() == "(q^2+1)/(q)");
  CHECK(Scalar(Rational(-3, 4)).to_string() == "(-3)/(4)");
}

TEST_CASE("field laws on random inputs") {
  std::mt19937 rng(7);
  std::map<std::string, Rational> pt{{"q", Rational(3, 2)}, {"lam_t", Rational(-5, 7)}};
  for (int i = 0; i < 60; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar(0));
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    if (a == b) {
      CHECK(a + c == b + c);
      CHECK(a * c == b * c);
    }
    // evaluation is a ring homomorphism (when defined)
    try {
      Rational ea = a.eval_at(pt), eb = b.eval_at(pt);
      CHECK((a * b).eval_at(pt) == ea * eb);
      CHECK((a + b).eval_at(pt) == ea + eb);
    } catch (const DenominatorVanishes&) {
    }
  }
}

TEST_CASE("denominators stay bounded under repeated sums") {
  Scalar s;
  for (int n = 1; n <= 12; ++n) s += qint(n) / (q - q.inverse());
  CHECK(s.denominator().size() <= 3);
  Scalar t = s.substitute({{0, Rational(2)}});
  CHECK(t.is_integer() == false);
  CHECK(t == Scalar(Rational(s.eval_at(std::map<std::string, Rational>{{"q", Rational(2)}}))));
}

TEST_CASE("sealed symbol table") {
  Symbols::index("lam_t");
  Symbols::seal();
  CHECK_THROWS_AS(Scalar::sym("brand_new"), SymbolTableSealed);
  CHECK_NOTHROW(Scalar::sym("lam_t"));
  Symbols::unseal();
}
