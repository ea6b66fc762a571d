#include "homcheck/scalar/symbols.hpp"

#include <algorithm>
#include <mutex>

#include "homcheck/errors.hpp"

namespace homcheck {
namespace {

struct Table {
  std::mutex mu;
  std::vector<std::string> names{"q"};
  bool sealed = false;
};

Table& table() {
  static Table t;
  return t;
}

}  // namespace

std::size_t Symbols::index(std::string_view name) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  auto it = std::find(t.names.begin(), t.names.end(), name);
  if (it != t.names.end()) return static_cast<std::size_t>(it - t.names.begin());
  if (t.sealed)
    throw SymbolTableSealed("cannot introduce symbol '" + std::string(name) +
                            "': parameter universe is sealed");
  if (t.names.size() == kMax)
    throw DomainError("symbol table full (" + std::to_string(kMax) + " symbols)");
  t.names.emplace_back(name);
  return t.names.size() - 1;
}

std::optional<std::size_t> Symbols::find(std::string_view name) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  auto it = std::find(t.names.begin(), t.names.end(), name);
  if (it == t.names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - t.names.begin());
}

std::string Symbols::name(std::size_t i) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  return i < t.names.size() ? t.names[i] : "?" + std::to_string(i);
}

std::size_t Symbols::size() {
  auto& t = table();
  std::lock_guard lock(t.mu);
  return t.names.size();
}

std::vector<std::string> Symbols::names() {
  auto& t = table();
  std::lock_guard lock(t.mu);
  return t.names;
}

void Symbols::seal() {
  auto& t = table();
  std::lock_guard lock(t.mu);
  t.sealed = true;
}

void Symbols::unseal() {
  auto& t = table();
  std::lock_guard lock(t.mu);
  t.sealed = false;
}

bool Symbols::sealed() {
  auto& t = table();
  std::lock_guard lock(t.mu);
  return t.sealed;
}

}  // namespace homcheck
