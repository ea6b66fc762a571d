#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homcheck/homstruct/homstruct.hpp"

namespace homcheck {

/// Vector of a module carrier: basis index -> coefficient.
using Vec = LinComb<long long>;

inline Vec basis_vec(long long i, const Scalar& c = Scalar(1)) { return Vec::of(i, c); }

/// Hom-module (M, α_M) on a finite basis window v_0..v_{dim-1}. A vector
/// with a component outside [0, dim) has left the window; every operation
/// that would need it throws WindowOverflow.
class HomModule {
 public:
  HomModule() = default;
  /// α_M defaults to the identity.
  explicit HomModule(std::vector<std::string> labels, std::vector<Vec> alpha = {});

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Vec>& alpha_table() const { return alpha_; }

  /// α_M^times(v).
  Vec alpha(const Vec& v, unsigned times = 1) const;
  void require_in_window(const Vec& v) const;
  std::string format(const Vec& v) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Vec> alpha_;
};

/// Linear operator on a window, one image per basis index.
using Operator = std::vector<Vec>;

/// How a structure was obtained.
enum class Provenance { Untwisted, HomNative, YauTwisted, Tensor };
std::string to_string(Provenance p);

/// Module over a Hom-associative algebra.
///
/// Every structure is built from an untwisted core action and the formula
///   ρ = α_Mb^u ∘ core ∘ (α_Ab^v ⊗ Id),   α_M = α_Mb^w,
/// where α_Ab, α_Mb are the base twisting maps. The core is either the
/// action of an associative algebra given by generator operators (word
/// actions are compositions; relations must act as zero) or a tensor
/// product of two modules over a Hom-bialgebra.
class ModuleStructure {
 public:
  /// Untwisted module over the associative algebra `pres`; `ops[g]` is the
  /// operator of generator g. Throws RelationViolated if some relation does
  /// not act as zero (pairs whose images leave the window are skipped).
  ModuleStructure(PresentationPtr pres, std::vector<std::string> labels,
                  std::vector<Operator> ops, std::string name = {});

  const std::string& name() const { return name_; }
  const HomAlgebra& algebra() const { return acting_; }
  const Presentation& presentation() const { return acting_.presentation(); }
  /// Carrier with the current α_M.
  HomModule carrier() const;
  std::size_t dim() const;
  const std::vector<std::string>& labels() const;
  Provenance provenance() const { return prov_; }
  /// Twist indices (n, k) of the last twisting step.
  std::pair<unsigned, unsigned> twist_indices() const { return {n_, k_}; }
  /// (u, v, w) of the defining formula.
  std::array<unsigned, 3> exponents() const { return {u_, v_, w_}; }

  /// Current structure map ρ(a, m).
  Vec act(const NcPoly& a, const Vec& m) const;
  Vec act(const Word& a, long long basis) const;
  /// Current α_M.
  Vec alpha(const Vec& m, unsigned times = 1) const;
  /// Core action (no twisting).
  Vec core_act(const Word& a, long long basis) const;
  std::string format(const Vec& v) const;

  /// Generator operators of an untwisted core (empty for tensor products).
  const std::vector<Operator>& generator_operators() const;

 private:
  struct Core;
  ModuleStructure(std::shared_ptr<const Core> core, HomAlgebra acting, std::string name);

  friend ModuleStructure derive_module(const ModuleStructure&, unsigned, unsigned);
  friend ModuleStructure yau_twist_module(const ModuleStructure&, const LinMap&, const Operator&,
                                          unsigned, unsigned);
  friend ModuleStructure tensor_module(const HomBialgebra&, const ModuleStructure&,
                                       const ModuleStructure&);

  std::shared_ptr<const Core> core_;
  HomAlgebra acting_;
  std::string name_;
  unsigned u_ = 0, v_ = 0, w_ = 1;
  unsigned n_ = 0, k_ = 0;
  Provenance prov_ = Provenance::Untwisted;
};

/// Relation certification: for every relation lhs = rhs of the acting
/// presentation and every window element, (lhs - rhs) acts as zero.
Report certify_relations(const ModuleStructure& m);

/// Multiplicativity α_M∘ρ = ρ∘(α_A⊗α_M) over (word, basis) and
/// Hom-associativity ρ∘(α_A⊗ρ) = ρ∘(μ_A⊗α_M) over (word, word, basis), for
/// words of length <= word_len (normal words when A has a rewriting
/// system). Instances that leave the window are skipped.
Report check_module(const HomAlgebra& a, const ModuleStructure& m, std::size_t word_len);
inline Report check_module(const ModuleStructure& m, std::size_t word_len) {
  return check_module(m.algebra(), m, word_len);
}

/// ρ^{n,k} = α_M^{2^k-1} ∘ ρ ∘ (α_A^n ⊗ Id) over A^k, carrier (M, α_M^{2^k}).
ModuleStructure derive_module(const ModuleStructure& m, unsigned n, unsigned k);

/// Verdict of checking α_M(a m) = α_A(a) α_M(m) on a set of instances.
struct CompatCertificate {
  bool granted = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  /// First failure for each offending generator (or word).
  std::vector<std::string> witnesses;
};

/// Checks α_M(g v_j) = α_A(g) α_M(v_j) for generators g and window elements
/// v_j only. The module must be untwisted.
CompatCertificate generator_compat_check(const ModuleStructure& m, const LinMap& alpha_a,
                                         const Operator& alpha_m);
/// The same identity for every word of length <= word_len.
CompatCertificate alpha_rho_check(const ModuleStructure& m, const LinMap& alpha_a,
                                  const Operator& alpha_m, std::size_t word_len);

/// ρ_α^{n,k} = α_M^{2^k} ∘ ρ ∘ (α_A^n ⊗ Id) over A_β (β = α_A^{2^k}), carrier
/// (M, α_M^{2^k}). Throws NotEndomorphism if α_A does not respect the
/// relations and CompatibilityFailed (with witness) if the generator check
/// fails.
ModuleStructure yau_twist_module(const ModuleStructure& m, const LinMap& alpha_a,
                                 const Operator& alpha_m, unsigned n, unsigned k);

/// ρ_{MN} = (ρ_M ⊗ ρ_N) ∘ (2 3) ∘ (Δ ⊗ Id ⊗ Id), α = α_M ⊗ α_N. Both
/// modules must act through H's algebra (StructureMismatch otherwise).
/// Basis pair (i, j) has index i * dim(N) + j.
ModuleStructure tensor_module(const HomBialgebra& h, const ModuleStructure& m,
                              const ModuleStructure& n);

}  // namespace homcheck
