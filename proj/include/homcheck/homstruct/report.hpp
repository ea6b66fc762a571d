#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace homcheck {

/// Outcome of one check instance. The residual text is only filled for
/// failures (it is the exact nonzero difference of the two sides).
struct Outcome {
  enum Verdict : char { Pass, Fail, Skip };
  Verdict verdict = Pass;
  std::string residual;

  static Outcome pass() { return {}; }
  static Outcome skip() { return {Skip, {}}; }
  static Outcome fail(std::string residual) { return {Fail, std::move(residual)}; }
};

/// Result of checking one axiom over an instance set.
struct AxiomResult {
  std::string id;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  std::optional<std::string> witness;  // first failing instance
  std::string residual;                // residual at that instance
  std::vector<Outcome::Verdict> verdicts;  // per instance, in input order

  bool passed() const { return failures == 0; }
};

/// A checker's report: axiom results in a fixed order plus free notes.
struct Report {
  std::string subject;
  std::vector<AxiomResult> axioms;
  std::vector<std::string> notes;

  bool passed() const;
  std::size_t failures() const;
  std::size_t skipped() const;
  const AxiomResult* find(const std::string& id) const;
  /// Human-readable multi-line summary.
  std::string to_text() const;
};

/// Number of worker threads used by the checkers (default 1).
void set_worker_count(unsigned n);
unsigned worker_count();

/// Evaluates `count` instances (possibly on several workers) and merges the
/// outcomes in index order. `describe(i)` is only called for the first
/// failing instance.
AxiomResult run_instances(std::string id, std::size_t count,
                          const std::function<Outcome(std::size_t)>& eval,
                          const std::function<std::string(std::size_t)>& describe);

}  // namespace homcheck
