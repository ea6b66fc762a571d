#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homcheck {

/// Process-wide table of indeterminates. Index 0 is always `q`.
///
/// The table is append-only so that the exponent layout of every existing
/// polynomial stays valid. After `seal()` no new names may be introduced;
/// a verification session seals the table once its parameters are declared.
class Symbols {
 public:
  static constexpr std::size_t kMax = 12;

  /// Index of `name`, declaring it if needed. Throws SymbolTableSealed when
  /// the name is new and the table is sealed, DomainError when full.
  static std::size_t index(std::string_view name);
  static std::optional<std::size_t> find(std::string_view name);
  static std::string name(std::size_t i);
  static std::size_t size();
  static std::vector<std::string> names();

  static void seal();
  static void unseal();
  static bool sealed();
};

}  // namespace homcheck
