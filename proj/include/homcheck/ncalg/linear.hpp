#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homcheck/ncalg/word.hpp"
#include "homcheck/scalar/scalar.hpp"

namespace homcheck {

/// Finite linear combination of keys with Scalar coefficients. Zero
/// coefficients are never stored, so two equal combinations have the same
/// key set and comparison is termwise.
template <class Key, class Cmp = std::less<Key>>
class LinComb {
 public:
  using Map = std::map<Key, Scalar, Cmp>;
  using key_type = Key;

  LinComb() = default;
  static LinComb of(Key k, Scalar c = Scalar(1)) {
    LinComb r;
    r.add(std::move(k), std::move(c));
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const LinComb& o, const Scalar& c = Scalar(1)) {
    if (c.is_zero()) return;
    bool unit = c.is_one();
    for (const auto& [k, v] : o.terms_) add(k, unit ? v : v * c);
  }

  LinComb operator+(const LinComb& o) const {
    LinComb r = *this;
    r.add(o);
    return r;
  }
  LinComb operator-(const LinComb& o) const {
    LinComb r = *this;
    r.add(o, Scalar(-1));
    return r;
  }
  LinComb operator-() const { return scaled(Scalar(-1)); }
  LinComb& operator+=(const LinComb& o) {
    add(o);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add(o, Scalar(-1));
    return *this;
  }

  LinComb scaled(const Scalar& c) const {
    if (c.is_zero()) return {};
    LinComb r = *this;
    for (auto& [k, v] : r.terms_) v *= c;
    return r;
  }

  /// Linear map applied key by key.
  template <class F>
  auto map_linear(F&& f) const -> decltype(f(std::declval<const Key&>())) {
    decltype(f(std::declval<const Key&>())) out;
    for (const auto& [k, v] : terms_) out.add(f(k), v);
    return out;
  }

  bool operator==(const LinComb& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    for (auto b = o.terms_.begin(); b != o.terms_.end(); ++a, ++b)
      if (a->first != b->first || !(a->second == b->second)) return false;
    return true;
  }

 private:
  Map terms_;
};

/// Noncommutative polynomial: linear combination of words.
using NcPoly = LinComb<Word, DegLex>;

template <std::size_t K>
using Tuple = std::array<Word, K>;

template <std::size_t K>
struct TupleLess {
  bool operator()(const Tuple<K>& a, const Tuple<K>& b) const {
    DegLex lt;
    for (std::size_t i = 0; i < K; ++i) {
      if (lt(a[i], b[i])) return true;
      if (lt(b[i], a[i])) return false;
    }
    return false;
  }
};

/// Element of the K-fold tensor power (K = 2, 3, 4).
template <std::size_t K>
using TensorPoly = LinComb<Tuple<K>, TupleLess<K>>;

inline NcPoly word_poly(const Word& w, const Scalar& c = Scalar(1)) { return NcPoly::of(w, c); }
inline NcPoly unit_poly() { return NcPoly::of(Word()); }
inline NcPoly scalar_poly(const Scalar& c) { return NcPoly::of(Word(), c); }

/// Free (concatenation) product, no reduction.
NcPoly concat(const NcPoly& a, const NcPoly& b);

/// Outer tensor product of K polynomials.
template <std::size_t K>
TensorPoly<K> tensor_of(const std::array<NcPoly, K>& factors) {
  TensorPoly<K> out;
  Tuple<K> key;
  std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t i, const Scalar& c) {
    if (i == K) {
      out.add(key, c);
      return;
    }
    for (const auto& [w, v] : factors[i]) {
      key[i] = w;
      rec(i + 1, c * v);
    }
  };
  rec(0, Scalar(1));
  return out;
}

/// Joins two tensors into a longer one: (a ⊗ b).
template <std::size_t A, std::size_t B>
TensorPoly<A + B> tensor_join(const TensorPoly<A>& a, const TensorPoly<B>& b) {
  TensorPoly<A + B> out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      Tuple<A + B> key;
      for (std::size_t i = 0; i < A; ++i) key[i] = ka[i];
      for (std::size_t i = 0; i < B; ++i) key[A + i] = kb[i];
      out.add(key, va * vb);
    }
  return out;
}

/// Applies a permutation of tensor factors: factor i of the result is
/// factor perm[i] of the input.
template <std::size_t K>
TensorPoly<K> permute(const TensorPoly<K>& t, const std::array<std::size_t, K>& perm) {
  TensorPoly<K> out;
  for (const auto& [k, v] : t) {
    Tuple<K> key;
    for (std::size_t i = 0; i < K; ++i) key[i] = k[perm[i]];
    out.add(key, v);
  }
  return out;
}

/// Coefficient text for `coeff * word` rendering: empty for 1, `-` for -1,
/// otherwise the Scalar (parenthesised when it is not a single atom).
std::string coefficient_prefix(const Scalar& c);
/// Joins pre-rendered signed terms with ` + ` / ` - `.
std::string join_terms(const std::vector<std::string>& terms);

std::string format(const NcPoly& p, const Alphabet& a);
template <std::size_t K>
std::string format(const TensorPoly<K>& t, const std::array<const Alphabet*, K>& alphabets);
template <std::size_t K>
std::string format(const TensorPoly<K>& t, const Alphabet& a) {
  std::array<const Alphabet*, K> as;
  as.fill(&a);
  return format<K>(t, as);
}

extern template std::string format<2>(const TensorPoly<2>&, const std::array<const Alphabet*, 2>&);
extern template std::string format<3>(const TensorPoly<3>&, const std::array<const Alphabet*, 3>&);
extern template std::string format<4>(const TensorPoly<4>&, const std::array<const Alphabet*, 4>&);

}  // namespace homcheck
