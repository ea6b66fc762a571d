#include "homcheck/ncalg/word.hpp"

#include <algorithm>
#include <sstream>

#include "homcheck/errors.hpp"

namespace homcheck {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 255) throw DomainError("alphabet larger than 255 generators");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw DomainError("duplicate generator '" + names_[i] + "'");
  inverse_.assign(names_.size(), -1);
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Alphabet::id(std::string_view name) const {
  auto i = find(name);
  if (!i) throw DomainError("unknown generator '" + std::string(name) + "'");
  return *i;
}

void Alphabet::pair_inverse(std::size_t a, std::size_t b) {
  if (a >= size() || b >= size() || a == b) throw DomainError("bad inverse pairing");
  inverse_[a] = static_cast<int>(b);
  inverse_[b] = static_cast<int>(a);
}

std::optional<std::size_t> Alphabet::inverse_of(std::size_t id) const {
  if (id >= inverse_.size() || inverse_[id] < 0) return std::nullopt;
  return static_cast<std::size_t>(inverse_[id]);
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (char c : w) {
    if (!out.empty()) out += ' ';
    std::size_t id = letter_id(c);
    out += id < names_.size() ? names_[id] : "#" + std::to_string(id);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  std::istringstream in{std::string(text)};
  Word w;
  std::string tok;
  while (in >> tok)
    if (tok != "1") w += letter_word(id(tok));
  return w;
}

}  // namespace homcheck
