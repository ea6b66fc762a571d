#pragma once

#include "homcheck/braiding/braiding.hpp"

namespace homcheck::presets {

// Group bialgebras of Z/2 = {1, g} and Z/2 x Z/2 = {1, a, b, ab}, with
// grouplike coproducts. Used to exercise the braided checkers.

/// Generator g, rule g g -> 1.
PresentationPtr z2_presentation();
HomBialgebra z2_bialgebra();
/// α(g) = 1: a bialgebra endomorphism that is neither injective nor surjective.
LinMap z2_collapse(const PresentationPtr& pres);
/// R = 1/2 (1⊗1 + 1⊗g + g⊗1 - g⊗g).
TensorPoly<2> z2_R();
/// R(g^i ⊗ g^j) = (-1)^{ij}.
CobraidForm z2_form();
/// R(x ⊗ y) = ε(x)ε(y).
CobraidForm z2_counit_form();

/// Generators a < b, rules a a -> 1, b b -> 1, b a -> a b.
PresentationPtr v4_presentation();
HomBialgebra v4_bialgebra();
/// The automorphism exchanging a and b.
LinMap v4_swap(const PresentationPtr& pres);
/// R = 1/2 (1⊗1 + 1⊗a + a⊗1 - a⊗a): triangular, not swap invariant.
TensorPoly<2> v4_R();
/// R(x ⊗ y) = -1 when both x and y contain a, else 1.
CobraidForm v4_form();

}  // namespace homcheck::presets
