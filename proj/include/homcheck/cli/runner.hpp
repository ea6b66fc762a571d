#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcheck/cli/spec.hpp"
#include "homcheck/homstruct/report.hpp"

namespace homcheck::cli {

/// Session knobs. Unset bounds fall back to each check's default.
struct RunOptions {
  std::optional<std::size_t> degree, word_len;
  std::size_t window = 12;
  std::map<std::string, Rational> instantiate;  // empty: symbolic mode
  std::optional<std::pair<unsigned, unsigned>> twist;
  bool trust_confluence = false;
  bool allow_skips = false;
  unsigned jobs = 1;
  std::string source;  // echoed in the report
};

/// One executed check.
struct CheckRecord {
  std::string suite;
  std::string check;      // kind
  std::string structure;  // target plus options, e.g. "QPlane twist al degree 3"
  enum Status { Pass, Fail, Error, Budget } status = Pass;
  Report report;
  std::string error_kind, error;
};

struct RunReport {
  RunOptions options;
  std::vector<CheckRecord> records;

  std::size_t passed() const;
  std::size_t skipped_instances() const;
  /// 0 pass, 1 verification failure (or skipped instances unless allowed),
  /// 3 resource budget exceeded.
  int exit_code() const;
};

/// Runs every suite of the spec in declaration order. Library errors raised
/// while building or checking a structure become failed records.
RunReport run(const SpecFile& spec, const RunOptions& opts);

std::string emit_text(const RunReport& r);
/// Structured form (JSON, fixed key order, two-space indentation).
std::string emit_json(const RunReport& r);

/// Built-in suites usable as `preset <id>;`.
const std::vector<std::string>& preset_suite_ids();
/// Declares the parameter symbols used by the built-in suites.
void declare_preset_symbols();

}  // namespace homcheck::cli
