#pragma once

#include <memory>
#include <string>
#include <vector>

#include "homcheck/homstruct/report.hpp"
#include "homcheck/ncalg/linmap.hpp"

namespace homcheck {

/// Lazily computed powers of a base twisting map, shared by every structure
/// derived from the same (presentation, α_base) pair.
class TwistPowers {
 public:
  explicit TwistPowers(LinMap base);
  const LinMap& base() const { return base_; }
  /// α_base^e (cached).
  const LinMap& power(unsigned e) const;

 private:
  struct Cache;
  LinMap base_;
  std::shared_ptr<Cache> cache_;
};

/// Twist exponents: μ = α_base^s ∘ μ_base (Δ = Δ_base ∘ α_base^s) and
/// α = α_base^m.
struct Exponents {
  unsigned s = 0;
  unsigned m = 1;
  bool operator==(const Exponents&) const = default;
};

/// Exponents of the n-th derived structure: (s, m) -> (s + m(2^n - 1), m 2^n).
Exponents derived_exponents(Exponents e, unsigned n);

/// Hom-associative algebra realized on a presentation.
class HomAlgebra {
 public:
  /// The ordinary algebra (α = Id, exponents (0,1)).
  explicit HomAlgebra(PresentationPtr pres, std::string name = {});
  HomAlgebra(PresentationPtr pres, LinMap alpha_base, Exponents e, std::string name = {});

  const std::string& name() const { return name_; }
  const Presentation& presentation() const { return *pres_; }
  const PresentationPtr& presentation_ptr() const { return pres_; }
  const LinMap& alpha_base() const { return powers_->base(); }
  const std::shared_ptr<const TwistPowers>& powers() const { return powers_; }
  Exponents exponents() const { return exp_; }

  /// μ(a, b) = α_base^s(nf(ab)).
  NcPoly mul(const NcPoly& a, const NcPoly& b) const;
  /// α^times (the current twisting map).
  NcPoly alpha(const NcPoly& x, unsigned times = 1) const;
  /// α_base^e.
  NcPoly alpha_base_pow(const NcPoly& x, unsigned e) const;

  /// Shares an existing power cache (used by the twisting constructors).
  HomAlgebra(PresentationPtr pres, std::shared_ptr<const TwistPowers> powers, Exponents e,
             std::string name);

 private:
  PresentationPtr pres_;
  std::shared_ptr<const TwistPowers> powers_;
  Exponents exp_;
  std::string name_;
};

/// Hom-coassociative coalgebra whose base comultiplication is given on
/// generators and extended multiplicatively in the underlying algebra.
class HomCoalgebra {
 public:
  /// Throws RelationViolated if Δ_base does not respect a rewrite rule.
  HomCoalgebra(PresentationPtr pres, std::vector<TensorPoly<2>> delta_gens, LinMap alpha_base,
               Exponents e, std::string name = {});

  const std::string& name() const { return name_; }
  const Presentation& presentation() const { return *pres_; }
  const PresentationPtr& presentation_ptr() const { return pres_; }
  const LinMap& alpha_base() const { return powers_->base(); }
  const std::shared_ptr<const TwistPowers>& powers() const { return powers_; }
  Exponents exponents() const { return exp_; }
  const std::vector<TensorPoly<2>>& delta_generators() const;

  /// Δ_base on a word (product of generator coproducts, factors normal-formed; cached).
  TensorPoly<2> delta_base(const Word& w) const;
  TensorPoly<2> delta_base(const NcPoly& x) const;
  /// Δ(x) = Δ_base(α_base^s(x)).
  TensorPoly<2> comul(const NcPoly& x) const;
  NcPoly alpha(const NcPoly& x, unsigned times = 1) const;
  NcPoly alpha_base_pow(const NcPoly& x, unsigned e) const;

  /// Generator coproducts plus the per-word cache; shared by derived copies.
  struct DeltaTable;
  const std::shared_ptr<const DeltaTable>& delta_table() const { return delta_gens_; }
  HomCoalgebra(PresentationPtr pres, std::shared_ptr<const DeltaTable> delta,
               std::shared_ptr<const TwistPowers> powers, Exponents e, std::string name);

 private:
  friend class HomBialgebra;

  PresentationPtr pres_;
  std::shared_ptr<const DeltaTable> delta_gens_;
  std::shared_ptr<const TwistPowers> powers_;
  Exponents exp_;
  std::string name_;
};

/// A Hom-algebra and Hom-coalgebra sharing presentation, α_base and
/// exponents.
class HomBialgebra {
 public:
  HomBialgebra(PresentationPtr pres, std::vector<TensorPoly<2>> delta_gens, LinMap alpha_base,
               Exponents e, std::string name = {});
  /// Ordinary bialgebra (α = Id).
  HomBialgebra(PresentationPtr pres, std::vector<TensorPoly<2>> delta_gens, std::string name = {});

  const std::string& name() const { return alg_.name(); }
  const HomAlgebra& algebra() const { return alg_; }
  const HomCoalgebra& coalgebra() const { return coalg_; }
  const Presentation& presentation() const { return alg_.presentation(); }
  const PresentationPtr& presentation_ptr() const { return alg_.presentation_ptr(); }
  const LinMap& alpha_base() const { return alg_.alpha_base(); }
  Exponents exponents() const { return alg_.exponents(); }

  NcPoly mul(const NcPoly& a, const NcPoly& b) const { return alg_.mul(a, b); }
  TensorPoly<2> comul(const NcPoly& x) const { return coalg_.comul(x); }
  NcPoly alpha(const NcPoly& x, unsigned times = 1) const { return alg_.alpha(x, times); }

  /// Factorwise current product in H^{⊗K}.
  template <std::size_t K>
  TensorPoly<K> mul_tensor(const TensorPoly<K>& a, const TensorPoly<K>& b) const {
    TensorPoly<K> out;
    for (const auto& [ka, va] : a)
      for (const auto& [kb, vb] : b) {
        std::array<NcPoly, K> f;
        for (std::size_t i = 0; i < K; ++i) f[i] = mul(word_poly(ka[i]), word_poly(kb[i]));
        out.add(tensor_of<K>(f), va * vb);
      }
    return out;
  }

 private:
  HomBialgebra(HomAlgebra a, HomCoalgebra c) : alg_(std::move(a)), coalg_(std::move(c)) {}
  friend HomBialgebra derived(const HomBialgebra&, unsigned);
  friend HomBialgebra yau_twist(const HomBialgebra&, const LinMap&);

  HomAlgebra alg_;
  HomCoalgebra coalg_;
};

// ---------------------------------------------------------------------------
// Twisting principles

/// A_α = (A, α∘μ, α). Requires exponents (0,1); α must respect every
/// relation (NotEndomorphism otherwise, naming the rule).
HomAlgebra yau_twist(const HomAlgebra& a, const LinMap& alpha);
/// Also requires α to be a coalgebra morphism on generators:
/// (α⊗α)Δ(g) = Δ(α(g)).
HomCoalgebra yau_twist(const HomCoalgebra& c, const LinMap& alpha);
HomBialgebra yau_twist(const HomBialgebra& h, const LinMap& alpha);

/// n-th derived structure (μ^{(n)} = α^{2^n-1}∘μ, α^{2^n}).
HomAlgebra derived(const HomAlgebra& a, unsigned n);
HomCoalgebra derived(const HomCoalgebra& c, unsigned n);
HomBialgebra derived(const HomBialgebra& h, unsigned n);

// ---------------------------------------------------------------------------
// Axiom checks over normal words of degree <= d

Report check_hom_algebra(const HomAlgebra& a, std::size_t degree);
Report check_hom_coalgebra(const HomCoalgebra& c, std::size_t degree);
Report check_hom_bialgebra(const HomBialgebra& h, std::size_t degree);

/// Single-instance residuals (zero when the axiom holds at the instance).
NcPoly hom_associativity_residual(const HomAlgebra& a, const NcPoly& x, const NcPoly& y,
                                  const NcPoly& z);
TensorPoly<3> hom_coassociativity_residual(const HomCoalgebra& c, const NcPoly& x);
TensorPoly<2> compatibility_residual(const HomBialgebra& h, const NcPoly& a, const NcPoly& b);

}  // namespace homcheck
