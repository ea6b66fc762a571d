#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homcheck/ncalg/presentation.hpp"

namespace homcheck {

/// Linear map on an algebra or on a module carrier.
///
/// Multiplicative maps are given by generator images and extended as algebra
/// morphisms into the ambient presentation (results normal-formed). Tabular
/// maps are given by the image of every basis element of a finite window;
/// applying them outside the window throws OutOfWindow.
class LinMap {
 public:
  enum class Mode { Multiplicative, Tabular };

  LinMap() = default;  // empty tabular map
  static LinMap identity(PresentationPtr pres);
  static LinMap multiplicative(PresentationPtr pres, std::vector<NcPoly> images);
  static LinMap tabular(std::map<Word, NcPoly, DegLex> table, PresentationPtr pres = nullptr);
  /// Identity on the given window.
  static LinMap tabular_identity(const std::vector<Word>& window, PresentationPtr pres = nullptr);

  Mode mode() const { return mode_; }
  const PresentationPtr& presentation() const { return pres_; }
  const std::vector<NcPoly>& images() const { return images_; }
  const std::map<Word, NcPoly, DegLex>& table() const { return table_; }

  NcPoly apply(const Word& w) const;
  NcPoly apply(const NcPoly& p) const;

  /// (*this) ∘ inner.
  LinMap compose(const LinMap& inner) const;
  LinMap power(unsigned n) const;
  bool is_identity() const;

  /// For multiplicative maps: the first rewrite rule / relation whose two
  /// sides have different images, rendered as text; nullopt when the map
  /// respects every relation.
  std::optional<std::string> endomorphism_violation() const;

 private:
  struct Cache;

  Mode mode_ = Mode::Tabular;
  PresentationPtr pres_;
  std::vector<NcPoly> images_;
  std::map<Word, NcPoly, DegLex> table_;
  std::shared_ptr<Cache> cache_;
};

/// (m1 ⊗ ... ⊗ mK)(t).
template <std::size_t K>
TensorPoly<K> apply_tensor(const std::array<const LinMap*, K>& maps, const TensorPoly<K>& t) {
  TensorPoly<K> out;
  for (const auto& [k, v] : t) {
    std::array<NcPoly, K> f;
    for (std::size_t i = 0; i < K; ++i) f[i] = maps[i] ? maps[i]->apply(k[i]) : word_poly(k[i]);
    out.add(tensor_of<K>(f), v);
  }
  return out;
}

}  // namespace homcheck
