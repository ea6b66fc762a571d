#include "homcheck/presets/fixtures.hpp"

namespace homcheck::presets {

namespace {

TensorPoly<2> tens(const Word& a, const Word& b, const Scalar& c = Scalar(1)) {
  return TensorPoly<2>::of({a, b}, c);
}

// R = 1/2 (1⊗1 + 1⊗x + x⊗1 - x⊗x)
TensorPoly<2> half_sign(const Word& x) {
  Scalar h = Scalar(2).inverse();
  return tens("", "", h) + tens("", x, h) + tens(x, "", h) + tens(x, x, -h);
}

}  // namespace

PresentationPtr z2_presentation() {
  Word g = letter_word(0);
  return std::make_shared<Presentation>("z2", Alphabet({"g"}),
                                        std::vector<RewriteRule>{{g + g, unit_poly()}});
}

HomBialgebra z2_bialgebra() {
  auto pres = z2_presentation();
  Word g = letter_word(0);
  return HomBialgebra(pres, {tens(g, g)}, "z2");
}

LinMap z2_collapse(const PresentationPtr& pres) { return LinMap::multiplicative(pres, {unit_poly()}); }

TensorPoly<2> z2_R() { return half_sign(letter_word(0)); }

CobraidForm z2_form() {
  Word g = letter_word(0);
  return CobraidForm({"", g}, {{{"", ""}, 1}, {{"", g}, 1}, {{g, ""}, 1}, {{g, g}, -1}});
}

CobraidForm z2_counit_form() {
  Word g = letter_word(0);
  return CobraidForm({"", g}, {{{"", ""}, 1}, {{"", g}, 1}, {{g, ""}, 1}, {{g, g}, 1}});
}

PresentationPtr v4_presentation() {
  Word a = letter_word(0), b = letter_word(1);
  std::vector<RewriteRule> rules{{a + a, unit_poly()}, {b + b, unit_poly()}, {b + a, word_poly(a + b)}};
  return std::make_shared<Presentation>("v4", Alphabet({"a", "b"}), std::move(rules));
}

HomBialgebra v4_bialgebra() {
  auto pres = v4_presentation();
  Word a = letter_word(0), b = letter_word(1);
  return HomBialgebra(pres, {tens(a, a), tens(b, b)}, "v4");
}

LinMap v4_swap(const PresentationPtr& pres) {
  return LinMap::multiplicative(pres, {word_poly(letter_word(1)), word_poly(letter_word(0))});
}

TensorPoly<2> v4_R() { return half_sign(letter_word(0)); }

CobraidForm v4_form() {
  Word a = letter_word(0), b = letter_word(1);
  std::vector<Word> basis{"", a, b, a + b};
  CobraidForm::Table t;
  for (const auto& x : basis)
    for (const auto& y : basis) {
      bool ax = x.find(a) != Word::npos, ay = y.find(a) != Word::npos;
      t[{x, y}] = ax && ay ? -1 : 1;
    }
  return CobraidForm(basis, std::move(t));
}

}  // namespace homcheck::presets
