#pragma once

#include <vector>

#include "homcheck/presets/algebras.hpp"
#include "homcheck/repr/comodule.hpp"
#include "homcheck/repr/mha.hpp"

namespace homcheck::presets {

// U_q(sl2)-modules ------------------------------------------------------------

/// The (n+1)-dimensional simple module V(ε, n), basis v0..vn:
/// K v_i = ε q^{n-2i} v_i, E v_i = ε [n-i+1] v_{i-1}, F v_i = [i+1] v_{i+1}.
ModuleStructure module_V(int eps, unsigned n, const Scalar& q = Scalar::q());
/// Verma module M_q(η) on the window v0..vN. F v_N leaves the window.
ModuleStructure verma(const Scalar& eta, unsigned window, const Scalar& q = Scalar::q());
/// α_ξ(v_i) = ξ λ^{-i} v_i on v0..v_{dim-1}.
Operator alpha_xi(std::size_t dim, const Scalar& xi, const Scalar& lambda);

// U_q(sl_n)-modules -----------------------------------------------------------

/// The vector representation V_n of U_q(sl_n), basis v1..vn.
ModuleStructure module_Vn(unsigned n, const Scalar& q = Scalar::q());
/// α_ξ(v_i) = ξ (λ1⋯λ_{i-1})^{-1} v_i.
Operator alpha_xi_sln(const Scalar& xi, const std::vector<Scalar>& lambdas);

// Quantum-plane module-algebras ---------------------------------------------------

/// E P = x ∂_{q,y} P, F P = (∂_{q,x} P) y, K^{±1} P = P(q^{±1} x, q^{∓1} y).
ActionTransducer qplane_action_standard(const Scalar& q = Scalar::q());
/// K^{±1}(x^m y^n) = q^{±(m-2n)} x^m y^n, E(x^m y^n) = q^{1-n}[n] x^m y^{n-1},
/// F(x^m y^n) = q^{-m} (q^{2m} - q^{2n}) / (q - q^{-1}) x^m y^{n+1}.
/// A rational q is validated as below.
ActionTransducer qplane_action_nonstandard(const Scalar& q = Scalar::q());
/// Throws DomainError unless 0 < q < 1 (the regime of the non-standard action).
void validate_nonstandard_q(const Rational& q);

/// α(x) = ξ x, α(y) = ξ λ^{-1} y.
LinMap qplane_twist(const PresentationPtr& plane, const Scalar& xi, const Scalar& lambda);

/// The untwisted U_q(sl2)-module-algebra on the quantum plane.
ModuleHomAlgebra qplane_module_algebra(bool standard, const Scalar& q = Scalar::q());
/// ρ_α^{l,k} with α_λ on U_q(sl2) and the twist above.
ModuleHomAlgebra qplane_standard(const Scalar& lambda, const Scalar& xi, unsigned l, unsigned k,
                                 const Scalar& q = Scalar::q());
/// As above for the non-standard action; ξ must be 1 (NonunitXiForbidden).
ModuleHomAlgebra qplane_nonstandard(const Scalar& lambda, const Scalar& xi, unsigned l, unsigned k,
                                    const Scalar& q = Scalar::q());

// Comodules -----------------------------------------------------------------------

/// ρ(v_i) = g ⊗ v_i on a two-element basis over the Z/2 coalgebra.
ComoduleStructure z2_grouplike_comodule();
/// ρ(v0) = 1 ⊗ v0, ρ(v1) = g ⊗ v1 (the Z/2-grading).
ComoduleStructure z2_graded_comodule();
/// α_C(1) = g, α_C(g) = 1: a coalgebra automorphism, not an algebra map.
LinMap z2_coalgebra_swap(const PresentationPtr& pres);

}  // namespace homcheck::presets
