#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "homcheck/repr/module.hpp"

namespace homcheck {

/// Elements of C ⊗ M and C ⊗ C ⊗ M (C-words times basis indices).
using CoVec = LinComb<std::pair<Word, long long>>;
using CoVec2 = LinComb<std::tuple<Word, Word, long long>>;

/// Comodule over a Hom-coalgebra, built like ModuleStructure from an
/// untwisted coaction ρ0 on a finite basis:
///   ρ = (α_Cb^v ⊗ Id) ∘ ρ0 ∘ α_Mb^u,   α_M = α_Mb^w.
class ComoduleStructure {
 public:
  /// Untwisted comodule over an ordinary coalgebra; `coaction[i]` = ρ0(v_i).
  /// The comodule axioms are not certified here (see check_comodule).
  ComoduleStructure(HomCoalgebra c, std::vector<std::string> labels, std::vector<CoVec> coaction,
                    std::string name = {});

  const std::string& name() const { return name_; }
  const HomCoalgebra& coalgebra() const { return c_; }
  std::size_t dim() const { return base_.dim(); }
  const std::vector<std::string>& labels() const { return base_.labels(); }
  Provenance provenance() const { return prov_; }
  std::array<unsigned, 3> exponents() const { return {u_, v_, w_}; }

  CoVec coact(const Vec& m) const;
  Vec alpha(const Vec& m, unsigned times = 1) const;
  /// ρ0 (no twisting).
  CoVec core_coact(const Vec& m) const;

  std::string format(const CoVec& t) const;
  std::string format(const CoVec2& t) const;

 private:
  friend ComoduleStructure derive_comodule(const ComoduleStructure&, unsigned, unsigned);
  friend ComoduleStructure yau_twist_comodule(const ComoduleStructure&, const LinMap&,
                                              const Operator&, unsigned, unsigned);

  HomCoalgebra c_;
  HomModule base_;
  std::vector<CoVec> table_;
  std::string name_;
  unsigned u_ = 0, v_ = 0, w_ = 1;
  Provenance prov_ = Provenance::Untwisted;
};

/// ρ∘α_M = (α_C⊗α_M)∘ρ and (α_C⊗ρ)∘ρ = (Δ_C⊗α_M)∘ρ on every basis element.
Report check_comodule(const HomCoalgebra& c, const ComoduleStructure& m);
inline Report check_comodule(const ComoduleStructure& m) { return check_comodule(m.coalgebra(), m); }

/// ρ^{n,k} = (α_C^n ⊗ Id) ∘ ρ ∘ α_M^{2^k-1} over C^k, carrier (M, α_M^{2^k}).
ComoduleStructure derive_comodule(const ComoduleStructure& m, unsigned n, unsigned k);

/// ρ∘α_M = (α_C⊗α_M)∘ρ on the basis (untwisted comodule).
CompatCertificate comodule_compat_check(const ComoduleStructure& m, const LinMap& alpha_c,
                                        const Operator& alpha_m);

/// ρ_α^{n,k} = (α_C^n ⊗ Id) ∘ ρ ∘ α_M^{2^k} over C_β (β = α_C^{2^k}).
/// NotEndomorphism if α_C is not a coalgebra morphism, CompatibilityFailed
/// if the hypothesis above fails.
ComoduleStructure yau_twist_comodule(const ComoduleStructure& m, const LinMap& alpha_c,
                                     const Operator& alpha_m, unsigned n, unsigned k);

}  // namespace homcheck
