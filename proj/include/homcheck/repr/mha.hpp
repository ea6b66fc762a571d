#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homcheck/repr/module.hpp"

namespace homcheck {

/// Closed-form action of the generators of one algebra on the normal
/// monomials of another (an infinite carrier, so no operator table).
struct ActionTransducer {
  std::string name;
  PresentationPtr acting;
  PresentationPtr carrier;
  std::function<NcPoly(std::size_t generator, const Word& monomial)> rule;
  std::vector<std::string> notes;
};

/// Untwisted action of an acting word on a carrier element (generator rules
/// composed right to left).
NcPoly transduce(const ActionTransducer& t, const Word& x, const NcPoly& a);

/// Generator actions on every normal monomial of degree <= degree, built
/// from the rules on monomials of degree <= 1 by g(ab) = Σ (g1 a)(g2 b) in
/// the ordinary bialgebra h0 and the ordinary carrier algebra.
std::map<std::pair<std::size_t, Word>, NcPoly> materialize_action(const ActionTransducer& t,
                                                                 const HomBialgebra& h0,
                                                                 std::size_t degree);

/// H-module Hom-algebra structure on A:
///   ρ(x, a) = α_Ab^u(ρ0(α_Hb^v(x), a)),
/// ρ0 the transducer's untwisted action.
class ModuleHomAlgebra {
 public:
  /// Untwisted module-algebra (h0 and a0 ordinary).
  ModuleHomAlgebra(HomBialgebra h0, HomAlgebra a0, ActionTransducer t);

  const HomBialgebra& bialgebra() const { return h_; }
  const HomAlgebra& algebra() const { return a_; }
  const ActionTransducer& transducer() const { return *t_; }
  Provenance provenance() const { return prov_; }
  std::pair<unsigned, unsigned> twist_indices() const { return {n_, k_}; }
  std::pair<unsigned, unsigned> exponents() const { return {u_, v_}; }

  NcPoly act(const NcPoly& x, const NcPoly& a) const;
  /// ρ with an extra α_H^extra on the acting side (ρ^{extra,0}).
  NcPoly act_shifted(const NcPoly& x, const NcPoly& a, unsigned extra) const;
  NcPoly core_act(const Word& x, const Word& monomial) const;

 private:
  friend ModuleHomAlgebra derive_mha(const ModuleHomAlgebra&, unsigned, unsigned);
  friend ModuleHomAlgebra yau_twist_mha(const ModuleHomAlgebra&, const LinMap&, const LinMap&,
                                        unsigned, unsigned, std::size_t);
  struct Cache;

  HomBialgebra h_;
  HomAlgebra a_;
  std::shared_ptr<const ActionTransducer> t_;
  std::shared_ptr<Cache> cache_;
  unsigned u_ = 0, v_ = 0;
  unsigned n_ = 0, k_ = 0;
  Provenance prov_ = Provenance::Untwisted;
};

/// Relations of H acting as zero on the carrier monomials of degree <= d.
Report certify_relations(const ModuleHomAlgebra& s, std::size_t degree);

/// Residual α_H²(x)(ab) - Σ (x1 a)(x2 b).
NcPoly mha_residual(const ModuleHomAlgebra& s, const NcPoly& x, const NcPoly& a, const NcPoly& b);

/// Relation vanishing, the two module axioms (H-words of length <=
/// word_len, monomials of degree <= degree) and the module Hom-algebra
/// axiom over (word, monomial, monomial). The last axiom's verdicts are
/// indexed (x, a, b) row-major.
Report check_module_hom_algebra(const ModuleHomAlgebra& s, std::size_t word_len,
                                std::size_t degree);

/// The same instances through the characterization "μ_A is a morphism of
/// H-modules A⊗A -> A": ρ^{2,0}(x, μ(a,b)) = μ_A(ρ_AA(x, a⊗b)).
Report mha_via_morphism_check(const ModuleHomAlgebra& s, std::size_t word_len, std::size_t degree);

/// ρ^{n,k} = α_A^{2^k-1} ∘ ρ ∘ (α_H^n ⊗ Id) over H^k acting on A^k.
ModuleHomAlgebra derive_mha(const ModuleHomAlgebra& s, unsigned n, unsigned k);

/// α_A(g m) = α_H(g) α_A(m) for generators g and monomials of degree <= degree.
CompatCertificate generator_compat_check(const ModuleHomAlgebra& s, const LinMap& alpha_h,
                                         const LinMap& alpha_a, std::size_t degree);
/// The same identity for H-words of length <= word_len.
CompatCertificate alpha_rho_check(const ModuleHomAlgebra& s, const LinMap& alpha_h,
                                  const LinMap& alpha_a, std::size_t word_len, std::size_t degree);

/// ρ_α^{n,k} = α_A^{2^k} ∘ ρ ∘ (α_H^n ⊗ Id) making A_β an H_γ-module
/// Hom-algebra (β = α_A^{2^k}, γ = α_H^{2^k}). The hypothesis is checked on
/// generators and monomials of degree <= compat_degree.
ModuleHomAlgebra yau_twist_mha(const ModuleHomAlgebra& s, const LinMap& alpha_h,
                               const LinMap& alpha_a, unsigned n, unsigned k,
                               std::size_t compat_degree = 6);

}  // namespace homcheck
