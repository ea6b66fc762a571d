#pragma once

#include <memory>
#include <string>
#include <vector>

#include "homcheck/ncalg/rewrite.hpp"

namespace homcheck {

/// A defining relation `lhs = rhs`.
struct Relation {
  NcPoly lhs, rhs;
  bool operator==(const Relation&) const = default;
};

/// An algebra given by generators and relations. When a rewriting system is
/// attached it defines the multiplication (product = normal form of the
/// concatenation). Without one the algebra is handled as the free algebra
/// and the relations are only used for certification on representations.
class Presentation {
 public:
  Presentation(std::string name, Alphabet alphabet, std::vector<RewriteRule> rules,
               std::vector<Relation> extra_relations = {},
               std::size_t step_budget = RewriteSystem::kDefaultBudget);
  /// Relations-only presentation (no multiplication table).
  static std::shared_ptr<Presentation> relations_only(std::string name, Alphabet alphabet,
                                                      std::vector<Relation> relations);

  const std::string& name() const { return name_; }
  const Alphabet& alphabet() const { return alphabet_; }
  bool has_rewriting() const { return rs_ != nullptr; }
  const RewriteSystem& rewriting() const;

  /// Every defining relation: rewrite rules as `lhs = rhs` plus extra ones.
  std::vector<Relation> relations() const;

  NcPoly nf(const NcPoly& p) const;
  NcPoly nf(const Word& w) const;
  NcPoly mul(const NcPoly& a, const NcPoly& b) const;
  bool is_normal(const Word& w) const;

  /// All normal words of length <= max_degree in DegLex order (the empty
  /// word included).
  std::vector<Word> normal_words(std::size_t max_degree) const;

  NcPoly gen(std::string_view name, const Scalar& c = Scalar(1)) const {
    return word_poly(letter_word(alphabet_.id(name)), c);
  }
  std::string format(const NcPoly& p) const { return homcheck::format(p, alphabet_); }
  template <std::size_t K>
  std::string format(const TensorPoly<K>& t) const {
    return homcheck::format<K>(t, alphabet_);
  }

 private:
  Presentation() = default;

  std::string name_;
  Alphabet alphabet_;
  std::shared_ptr<const RewriteSystem> rs_;
  std::vector<Relation> extra_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Factorwise product (a1⊗..⊗aK)(b1⊗..⊗bK) = a1b1⊗..⊗aKbK in the tensor power.
template <std::size_t K>
TensorPoly<K> tensor_product_in_algebra(const TensorPoly<K>& a, const TensorPoly<K>& b,
                                        const Presentation& pres) {
  TensorPoly<K> out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      std::array<NcPoly, K> f;
      for (std::size_t i = 0; i < K; ++i) f[i] = pres.nf(ka[i] + kb[i]);
      out.add(tensor_of<K>(f), va * vb);
    }
  return out;
}

/// Normal-forms every tensor factor.
template <std::size_t K>
TensorPoly<K> tensor_nf(const TensorPoly<K>& t, const Presentation& pres) {
  TensorPoly<K> out;
  for (const auto& [k, v] : t) {
    std::array<NcPoly, K> f;
    for (std::size_t i = 0; i < K; ++i) f[i] = pres.nf(k[i]);
    out.add(tensor_of<K>(f), v);
  }
  return out;
}

}  // namespace homcheck
