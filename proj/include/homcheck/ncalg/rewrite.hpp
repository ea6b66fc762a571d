#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homcheck/ncalg/linear.hpp"

namespace homcheck {

struct RewriteRule {
  Word lhs;
  NcPoly rhs;
};

enum class Strategy {
  LeftmostInnermost,   // first redex from the left; shortest match on ties
  RightmostOutermost,  // first redex from the right; longest match on ties
};

/// String rewriting system over a fixed alphabet, ordered by DegLex.
///
/// Every word of every right-hand side must be strictly smaller than its
/// left-hand side, so every reduction sequence terminates. Normal forms of
/// words are memoized per strategy; the object is safe to share between
/// threads.
class RewriteSystem {
 public:
  static constexpr std::size_t kDefaultBudget = 1'000'000;

  /// Throws RuleOrderViolation naming the offending rule.
  RewriteSystem(const Alphabet& alphabet, std::vector<RewriteRule> rules,
                std::size_t step_budget = kDefaultBudget);
  ~RewriteSystem();
  RewriteSystem(const RewriteSystem&) = delete;
  RewriteSystem& operator=(const RewriteSystem&) = delete;

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::size_t max_lhs_length() const { return max_lhs_; }
  std::size_t step_budget() const { return budget_; }

  /// Throws StepBudgetExceeded when one call needs more than the budget.
  NcPoly normal_form(const NcPoly& p, Strategy s = Strategy::LeftmostInnermost) const;
  NcPoly normal_form(const Word& w, Strategy s = Strategy::LeftmostInnermost) const;
  bool is_normal(const Word& w) const;

  /// Position and rule index of the redex chosen by `s`, if any.
  struct Redex {
    std::size_t pos;
    std::size_t rule;
  };
  std::optional<Redex> find_redex(const Word& w, Strategy s) const;
  /// Replaces the redex by the rule's right-hand side (no further reduction).
  NcPoly rewrite_at(const Word& w, Redex r) const;

 private:
  struct Cache;
  NcPoly reduce(const Word& w, Strategy s, std::size_t& steps) const;

  Alphabet alphabet_;
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<std::size_t>> by_first_;  // first letter -> rule ids
  std::size_t min_lhs_ = 0, max_lhs_ = 0;
  std::size_t budget_;
  std::unique_ptr<Cache> cache_;
};

struct CriticalPair {
  Word overlap;
  std::size_t rule_a, rule_b;
  std::size_t pos_a, pos_b;
  NcPoly via_a, via_b;  // normal forms after the first step on each side
};

struct ConfluenceReport {
  std::size_t overlaps_checked = 0;
  std::vector<CriticalPair> unjoined;
  bool confluent() const { return unjoined.empty(); }
};

/// Enumerates every overlap (suffix/prefix and inclusion) between rule
/// left-hand sides whose overlap word has length <= `max_overlap_len`,
/// rewrites it at both redexes and compares the normal forms.
/// Requires max_overlap_len >= the longest left-hand side.
ConfluenceReport local_confluence_check(const RewriteSystem& rs, std::size_t max_overlap_len);

}  // namespace homcheck
