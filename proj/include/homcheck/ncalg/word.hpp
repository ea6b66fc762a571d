#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homcheck {

/// A word in the free monoid: one byte per letter, holding the generator's
/// index in its alphabet. The empty string is the unit.
using Word = std::string;
using Letter = unsigned char;

inline Word letter_word(std::size_t id) { return Word(1, static_cast<char>(id)); }
inline std::size_t letter_id(char c) { return static_cast<Letter>(c); }

/// Degree-lexicographic order: shorter words first, then lexicographic by
/// generator index (generator precedence = declaration order).
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;  // char_traits<char>::compare is unsigned (memcmp)
  }
};

/// Ordered list of generator names, with optional formal-inverse pairing.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t id) const { return names_.at(id); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws DomainError for an unknown name.
  std::size_t id(std::string_view name) const;

  /// Declares `a` and `b` as formal inverses of each other.
  void pair_inverse(std::size_t a, std::size_t b);
  std::optional<std::size_t> inverse_of(std::size_t id) const;

  /// Space-separated generator names; the empty word prints as `1`.
  std::string format(const Word& w) const;
  /// Inverse of `format`.
  Word parse(std::string_view text) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> inverse_;
};

}  // namespace homcheck
