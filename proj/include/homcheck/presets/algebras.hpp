#pragma once

#include <map>
#include <vector>

#include "homcheck/homstruct/homstruct.hpp"

namespace homcheck::presets {

// Quantum n-spaces ----------------------------------------------------------

/// k{x_1..x_n}/(x_j x_i - q x_i x_j, i<j); fermionic: x_j x_i + q x_i x_j and
/// x_i^2. Generators are named x, y when n = 2 and x1..xn otherwise; word
/// order x_1 < x_2 < ...
PresentationPtr quantum_space_presentation(unsigned n, bool fermionic = false,
                                           const Scalar& q = Scalar::q());

/// α(x_i) = λ_{f(i)} x_{f(i)} if 1 <= f(i) <= n, else 0. `f` lists f(1..n)
/// and must be strictly increasing (NotOrderPreserving); `lambdas` maps the
/// indices in the image of f that land in 1..n to their scalars (missing
/// entries default to 1).
LinMap quantum_space_twist(const PresentationPtr& pres, const std::vector<long long>& f,
                           const std::map<long long, Scalar>& lambdas);

/// The Hom-quantum (fermionic) n-space A_α.
HomAlgebra quantum_space(unsigned n, const std::vector<long long>& f,
                         const std::map<long long, Scalar>& lambdas, const Scalar& q = Scalar::q());
HomAlgebra fermionic_space(unsigned n, const std::vector<long long>& f,
                           const std::map<long long, Scalar>& lambdas, const Scalar& q = Scalar::q());

// Quantum enveloping algebras -------------------------------------------------

/// U_q(sl2) with generators F < K < Ki < E and its PBW rewriting system.
PresentationPtr uq_sl2_presentation(const Scalar& q = Scalar::q());
/// Ordinary bialgebra U_q(sl2).
HomBialgebra uq_sl2_bialgebra(const Scalar& q = Scalar::q());
/// α_λ: E -> λE, F -> λ^{-1}F, K^{±1} fixed.
LinMap uq_sl2_twist(const PresentationPtr& pres, const Scalar& lambda);
/// U_q(sl2)_{α_λ}.
HomBialgebra uq_sl2(const Scalar& lambda, const Scalar& q = Scalar::q());

/// Cartan matrix of sl_n (type A_{n-1}), (n-1)x(n-1).
std::vector<std::vector<int>> cartan_sl(unsigned n);

/// U_q(sl_n): relations only (including the Serre relations); generators
/// E1..E_{n-1}, F1.., K1.., Ki1.. . Checked on representations only.
PresentationPtr uq_sln_presentation(unsigned n, const Scalar& q = Scalar::q());
std::vector<TensorPoly<2>> uq_sln_coproducts(const PresentationPtr& pres);
LinMap uq_sln_twist(const PresentationPtr& pres, const std::vector<Scalar>& lambdas);
/// Descriptor of U_q(sl_n)_{α_λ} (no multiplication table).
HomBialgebra uq_sln(unsigned n, const std::vector<Scalar>& lambdas);

}  // namespace homcheck::presets
