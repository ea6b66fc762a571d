#include "homcheck/ncalg/linmap.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "homcheck/errors.hpp"

namespace homcheck {

struct LinMap::Cache {
  std::shared_mutex mu;
  std::unordered_map<Word, NcPoly> words;
};

LinMap LinMap::identity(PresentationPtr pres) {
  std::vector<NcPoly> images;
  for (std::size_t g = 0; g < pres->alphabet().size(); ++g) images.push_back(word_poly(letter_word(g)));
  return multiplicative(std::move(pres), std::move(images));
}

LinMap LinMap::multiplicative(PresentationPtr pres, std::vector<NcPoly> images) {
  if (!pres) throw DomainError("multiplicative map needs an ambient presentation");
  if (images.size() != pres->alphabet().size())
    throw DomainError("multiplicative map: expected " + std::to_string(pres->alphabet().size()) +
                      " generator images, got " + std::to_string(images.size()));
  LinMap m;
  m.mode_ = Mode::Multiplicative;
  for (auto& img : images) img = pres->nf(img);
  m.images_ = std::move(images);
  m.pres_ = std::move(pres);
  m.cache_ = std::make_shared<Cache>();
  return m;
}

LinMap LinMap::tabular(std::map<Word, NcPoly, DegLex> table, PresentationPtr pres) {
  LinMap m;
  m.mode_ = Mode::Tabular;
  m.table_ = std::move(table);
  m.pres_ = std::move(pres);
  return m;
}

LinMap LinMap::tabular_identity(const std::vector<Word>& window, PresentationPtr pres) {
  std::map<Word, NcPoly, DegLex> table;
  for (const auto& w : window) table.emplace(w, word_poly(w));
  return tabular(std::move(table), std::move(pres));
}

NcPoly LinMap::apply(const Word& w) const {
  if (mode_ == Mode::Tabular) {
    auto it = table_.find(w);
    if (it == table_.end())
      throw OutOfWindow("basis element '" + (pres_ ? pres_->alphabet().format(w) : w) +
                        "' is outside the map's window");
    return it->second;
  }
  if (w.empty()) return unit_poly();
  if (w.size() == 1) return images_.at(letter_id(w[0]));
  {
    std::shared_lock lock(cache_->mu);
    auto it = cache_->words.find(w);
    if (it != cache_->words.end()) return it->second;
  }
  // Normal-forming the prefix image first keeps intermediate sums small.
  NcPoly result = pres_->mul(apply(w.substr(0, w.size() - 1)), images_[letter_id(w.back())]);
  std::unique_lock lock(cache_->mu);
  cache_->words.emplace(w, result);
  return result;
}

NcPoly LinMap::apply(const NcPoly& p) const {
  NcPoly out;
  for (const auto& [w, c] : p) out.add(apply(w), c);
  return out;
}

LinMap LinMap::compose(const LinMap& inner) const {
  if (inner.mode_ == Mode::Multiplicative && mode_ == Mode::Multiplicative) {
    std::vector<NcPoly> imgs;
    for (const auto& img : inner.images_) imgs.push_back(apply(img));
    return multiplicative(pres_, std::move(imgs));
  }
  std::map<Word, NcPoly, DegLex> table;
  if (inner.mode_ == Mode::Tabular) {
    for (const auto& [k, v] : inner.table_) table.emplace(k, apply(v));
  } else {
    // tabular outer after multiplicative inner: defined on the outer window
    for (const auto& [k, v] : table_) table.emplace(k, apply(inner.apply(k)));
  }
  return tabular(std::move(table), inner.pres_ ? inner.pres_ : pres_);
}

LinMap LinMap::power(unsigned n) const {
  LinMap result = mode_ == Mode::Multiplicative ? identity(pres_) : [this] {
    std::map<Word, NcPoly, DegLex> table;
    for (const auto& [k, v] : table_) table.emplace(k, word_poly(k));
    return tabular(std::move(table), pres_);
  }();
  LinMap base = *this;
  while (n) {
    if (n & 1u) result = base.compose(result);
    n >>= 1;
    if (n) base = base.compose(base);
  }
  return result;
}

bool LinMap::is_identity() const {
  if (mode_ == Mode::Multiplicative) {
    for (std::size_t g = 0; g < images_.size(); ++g)
      if (!(images_[g] == word_poly(letter_word(g)))) return false;
    return true;
  }
  for (const auto& [k, v] : table_)
    if (!(v == word_poly(k))) return false;
  return true;
}

std::optional<std::string> LinMap::endomorphism_violation() const {
  if (mode_ != Mode::Multiplicative || !pres_) return std::nullopt;
  for (const auto& rel : pres_->relations()) {
    NcPoly diff = pres_->nf(apply(rel.lhs) - apply(rel.rhs));
    if (!pres_->has_rewriting() && !diff.is_zero()) {
      // Without normal forms we can only recognise images that are scalar
      // multiples of the relation itself (enough for scaling maps).
      NcPoly r = rel.lhs - rel.rhs;
      if (!r.is_zero()) {
        Scalar ratio = diff.coeff(r.begin()->first) / r.begin()->second;
        if ((diff - r.scaled(ratio)).is_zero()) continue;
      }
    }
    if (!diff.is_zero())
      return pres_->format(rel.lhs) + " = " + pres_->format(rel.rhs) + " (residual " +
             pres_->format(diff) + ")";
  }
  return std::nullopt;
}

}  // namespace homcheck
