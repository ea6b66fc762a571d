#include <doctest.h>

#include <random>

#include "homcheck/errors.hpp"
#include "homcheck/ncalg/linmap.hpp"
#include "homcheck/presets/algebras.hpp"

using namespace homcheck;

namespace {

const Scalar q = Scalar::q();

Word parse(const Presentation& p, const char* text) { return p.alphabet().parse(text); }
NcPoly poly(const Presentation& p, const char* text, Scalar c = 1) {
  return word_poly(parse(p, text), c);
}

}  // namespace

TEST_CASE("quantum plane normal forms") {
  auto plane = presets::quantum_space_presentation(2);
  CHECK(plane->nf(parse(*plane, "y x")) == poly(*plane, "x y", q));
  CHECK(plane->nf(parse(*plane, "x y")) == poly(*plane, "x y"));
  CHECK(plane->nf(parse(*plane, "y y x")) == poly(*plane, "x y y", q * q));
  CHECK(plane->format(plane->nf(parse(*plane, "y x"))) == "q * x y");
}

TEST_CASE("fermionic normal forms") {
  auto f = presets::quantum_space_presentation(2, true);
  CHECK(f->nf(parse(*f, "y x")) == poly(*f, "x y", -q));
  CHECK(f->nf(parse(*f, "x x")).is_zero());
  CHECK(f->nf(parse(*f, "y x y")).is_zero());
  // finite dimensional: 1, x, y, xy
  CHECK(f->normal_words(5).size() == 4);
}

TEST_CASE("U_q(sl2) normal forms") {
  auto u = presets::uq_sl2_presentation();
  Scalar c = (q - q.inverse()).inverse();
  NcPoly expected = poly(*u, "F E") + poly(*u, "K", c) + poly(*u, "Ki", -c);
  CHECK(u->nf(parse(*u, "E F")) == expected);
  CHECK(u->nf(parse(*u, "K Ki")) == unit_poly());
  CHECK(u->nf(parse(*u, "E K")) == poly(*u, "K E", q.pow(-2)));
  // E F F: two applications of the commutation relation
  NcPoly eff = u->nf(parse(*u, "E F F"));
  NcPoly by_hand = poly(*u, "F F E") + poly(*u, "F K", c) + poly(*u, "F Ki", -c) +
                   poly(*u, "F K", c * q.pow(-2)) + poly(*u, "F Ki", -c * q * q);
  CHECK(eff == by_hand);
  // normal words avoid every left-hand side
  for (const auto& w : u->normal_words(3)) CHECK(u->is_normal(w));
  CHECK(u->normal_words(2).size() == 14);
}

TEST_CASE("rule order is enforced") {
  Alphabet a({"x", "y"});
  CHECK_THROWS_AS(RewriteSystem(a, {{a.parse("x y"), word_poly(a.parse("y x"))}}),
                  RuleOrderViolation);
  CHECK_THROWS_AS(RewriteSystem(a, {{a.parse("x"), word_poly(a.parse("y y"))}}),
                  RuleOrderViolation);
}

TEST_CASE("step budget") {
  // x -> 2 (empty word) is terminating; a tiny budget still trips on long words
  Alphabet a({"x", "y"});
  RewriteSystem rs(a, {{a.parse("y x"), word_poly(a.parse("x y")) + word_poly(a.parse("x x"))}}, 10);
  CHECK_THROWS_AS(rs.normal_form(a.parse("y y y y y x x x")), StepBudgetExceeded);
}

TEST_CASE("normal form is idempotent and linear") {
  auto u = presets::uq_sl2_presentation();
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> gen(0, 3), len(0, 5);
  for (int t = 0; t < 50; ++t) {
    Word a, b;
    for (int i = len(rng); i > 0; --i) a += letter_word(gen(rng));
    for (int i = len(rng); i > 0; --i) b += letter_word(gen(rng));
    NcPoly na = u->nf(a), nb = u->nf(b);
    CHECK(u->nf(na) == na);
    Scalar s = q + 2, r = q.inverse() - 3;
    CHECK(u->nf(word_poly(a, s) + word_poly(b, r)) == na.scaled(s) + nb.scaled(r));
  }
}

TEST_CASE("strategies agree on presets") {
  for (auto pres : {presets::quantum_space_presentation(3), presets::quantum_space_presentation(3, true),
                    presets::uq_sl2_presentation()}) {
    const auto& rs = pres->rewriting();
    std::size_t n = pres->alphabet().size();
    // all words of length <= 4 exhaustively
    std::vector<Word> layer{Word()};
    for (int d = 0; d < 4; ++d) {
      std::vector<Word> next;
      for (const auto& w : layer)
        for (std::size_t g = 0; g < n; ++g) next.push_back(w + letter_word(g));
      for (const auto& w : next)
        CHECK(rs.normal_form(w, Strategy::LeftmostInnermost) ==
              rs.normal_form(w, Strategy::RightmostOutermost));
      layer = std::move(next);
    }
  }
}

TEST_CASE("local confluence") {
  CHECK(local_confluence_check(presets::quantum_space_presentation(2)->rewriting(), 4).confluent());
  CHECK(local_confluence_check(presets::quantum_space_presentation(3)->rewriting(), 6).confluent());
  CHECK(local_confluence_check(presets::quantum_space_presentation(3, true)->rewriting(), 6).confluent());
  auto sl2 = local_confluence_check(presets::uq_sl2_presentation()->rewriting(), 6);
  CHECK(sl2.confluent());
  CHECK(sl2.overlaps_checked > 0);

  Alphabet a({"x", "y"});
  RewriteSystem bad(a, {{a.parse("y x"), word_poly(a.parse("x y"))},
                        {a.parse("y x"), word_poly(a.parse("x y"), 2)}});
  auto rep = local_confluence_check(bad, 2);
  REQUIRE(rep.unjoined.size() == 1);
  CHECK(rep.unjoined[0].overlap == a.parse("y x"));
  CHECK_THROWS_AS(local_confluence_check(bad, 1), DomainError);
}

TEST_CASE("linear maps") {
  auto u = presets::uq_sl2_presentation();
  Scalar l = Scalar::sym("lambda");
  LinMap al = presets::uq_sl2_twist(u, l);
  CHECK(al.apply(poly(*u, "E F")) == u->nf(parse(*u, "E F")));
  CHECK(al.apply(poly(*u, "E E")) == poly(*u, "E E", l * l));
  CHECK(LinMap::identity(u).apply(u->nf(parse(*u, "E F"))) == u->nf(parse(*u, "E F")));
  CHECK(al.power(3).apply(poly(*u, "F")) == poly(*u, "F", l.pow(-3)));
  CHECK(al.power(0).is_identity());
  CHECK_FALSE(al.endomorphism_violation());

  auto plane = presets::quantum_space_presentation(2);
  Scalar l2 = Scalar::sym("l2");
  LinMap shift = presets::quantum_space_twist(plane, {2, 3}, {{2, l2}});
  CHECK(shift.apply(poly(*plane, "x")) == poly(*plane, "y", l2));
  CHECK(shift.apply(poly(*plane, "y")).is_zero());
  CHECK_FALSE(shift.endomorphism_violation());
  CHECK_THROWS_AS(presets::quantum_space_twist(plane, {2, 2}, {}), NotOrderPreserving);

  // a map that breaks yx = qxy
  LinMap bad = LinMap::multiplicative(plane, {poly(*plane, "y"), poly(*plane, "x")});
  CHECK(bad.endomorphism_violation());

  // multiplicative maps commute with the product
  LinMap a2 = presets::quantum_space_twist(plane, {1, 2}, {{1, Scalar::sym("l1")}, {2, l2}});
  for (const auto& x : plane->normal_words(3))
    for (const auto& y : plane->normal_words(3))
      CHECK(a2.apply(plane->nf(x + y)) == plane->mul(a2.apply(x), a2.apply(y)));

  LinMap tab = LinMap::tabular({{Word(), poly(*plane, "x")}});
  CHECK_THROWS_AS(tab.apply(parse(*plane, "x")), OutOfWindow);
}

TEST_CASE("tensor products in the algebra") {
  auto u = presets::uq_sl2_presentation();
  auto t = [&](const char* a, const char* b) {
    return TensorPoly<2>::of({parse(*u, a), parse(*u, b)});
  };
  CHECK(tensor_product_in_algebra<2>(t("1", "1"), t("E", "K"), *u) == t("E", "K"));
  TensorPoly<2> prod = tensor_product_in_algebra<2>(t("E", "K"), t("F", "K"), *u);
  TensorPoly<2> expected = tensor_of<2>({u->nf(parse(*u, "E F")), poly(*u, "K K")});
  CHECK(prod == expected);

  auto plane = presets::quantum_space_presentation(2);
  auto tp = [&](const char* a, const char* b) {
    return TensorPoly<2>::of({parse(*plane, a), parse(*plane, b)});
  };
  CHECK(tensor_product_in_algebra<2>(tp("x", "y"), tp("y", "x"), *plane) ==
        TensorPoly<2>::of({parse(*plane, "x y"), parse(*plane, "x y")}, q));
  CHECK(format<2>(tp("x", "y"), plane->alphabet()) == "x @ y");
}

TEST_CASE("sl_n relations are well formed") {
  auto a = presets::cartan_sl(3);
  CHECK(a[0][1] == -1);
  CHECK(a[0][0] == 2);
  CHECK(presets::cartan_sl(4)[0][2] == 0);
  auto p = presets::uq_sln_presentation(3);
  CHECK_FALSE(p->has_rewriting());
  CHECK(p->alphabet().size() == 8);
  // 4 inverse + 1 K commute + 8 KE/KF + 4 commutators + 4 Serre
  CHECK(p->relations().size() == 4 + 1 + 8 + 4 + 4);
  CHECK_FALSE(presets::uq_sln_twist(p, {Scalar::sym("l1"), Scalar::sym("l2")}).endomorphism_violation());
}
