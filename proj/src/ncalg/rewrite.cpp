#include "homcheck/ncalg/rewrite.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "homcheck/errors.hpp"

namespace homcheck {

struct RewriteSystem::Cache {
  std::shared_mutex mu;
  std::array<std::unordered_map<Word, NcPoly>, 2> nf;
};

RewriteSystem::RewriteSystem(const Alphabet& alphabet, std::vector<RewriteRule> rules,
                             std::size_t step_budget)
    : alphabet_(alphabet),
      rules_(std::move(rules)),
      by_first_(alphabet.size()),
      budget_(step_budget),
      cache_(std::make_unique<Cache>()) {
  DegLex less;
  min_lhs_ = rules_.empty() ? 0 : SIZE_MAX;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& r = rules_[i];
    if (r.lhs.empty()) throw RuleOrderViolation("rule with empty left-hand side");
    for (char c : r.lhs)
      if (letter_id(c) >= alphabet.size()) throw DomainError("rule uses an unknown generator");
    for (const auto& [w, c] : r.rhs)
      if (!less(w, r.lhs))
        throw RuleOrderViolation("rule " + alphabet.format(r.lhs) + " -> " +
                                 format(r.rhs, alphabet) + ": word '" + alphabet.format(w) +
                                 "' is not smaller than the left-hand side");
    by_first_[letter_id(r.lhs[0])].push_back(i);
    min_lhs_ = std::min(min_lhs_, r.lhs.size());
    max_lhs_ = std::max(max_lhs_, r.lhs.size());
  }
}

RewriteSystem::~RewriteSystem() = default;

std::optional<RewriteSystem::Redex> RewriteSystem::find_redex(const Word& w, Strategy s) const {
  if (rules_.empty() || w.size() < min_lhs_) return std::nullopt;
  auto match_at = [&](std::size_t pos, bool longest) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for (std::size_t id : by_first_[letter_id(w[pos])]) {
      const Word& lhs = rules_[id].lhs;
      if (pos + lhs.size() > w.size() || w.compare(pos, lhs.size(), lhs) != 0) continue;
      if (!best) {
        best = id;
      } else {
        std::size_t cur = rules_[*best].lhs.size();
        if (longest ? lhs.size() > cur : lhs.size() < cur) best = id;
      }
    }
    return best;
  };
  if (s == Strategy::LeftmostInnermost) {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      if (auto id = match_at(pos, false)) return Redex{pos, *id};
  } else {
    for (std::size_t pos = w.size(); pos-- > 0;)
      if (auto id = match_at(pos, true)) return Redex{pos, *id};
  }
  return std::nullopt;
}

bool RewriteSystem::is_normal(const Word& w) const {
  return !find_redex(w, Strategy::LeftmostInnermost);
}

NcPoly RewriteSystem::rewrite_at(const Word& w, Redex r) const {
  const RewriteRule& rule = rules_[r.rule];
  Word prefix = w.substr(0, r.pos), suffix = w.substr(r.pos + rule.lhs.size());
  NcPoly out;
  for (const auto& [t, c] : rule.rhs) out.add(prefix + t + suffix, c);
  return out;
}

NcPoly RewriteSystem::reduce(const Word& w, Strategy s, std::size_t& steps) const {
  auto& table = cache_->nf[static_cast<int>(s)];
  {
    std::shared_lock lock(cache_->mu);
    auto it = table.find(w);
    if (it != table.end()) return it->second;
  }
  NcPoly result;
  if (auto redex = find_redex(w, s)) {
    if (++steps > budget_)
      throw StepBudgetExceeded("rewriting exceeded " + std::to_string(budget_) + " steps on '" +
                               alphabet_.format(w) + "'");
    for (const auto& [t, c] : rewrite_at(w, *redex)) result.add(reduce(t, s, steps), c);
  } else {
    result = word_poly(w);
  }
  std::unique_lock lock(cache_->mu);
  table.emplace(w, result);
  return result;
}

NcPoly RewriteSystem::normal_form(const Word& w, Strategy s) const {
  std::size_t steps = 0;
  return reduce(w, s, steps);
}

NcPoly RewriteSystem::normal_form(const NcPoly& p, Strategy s) const {
  std::size_t steps = 0;
  NcPoly out;
  for (const auto& [w, c] : p) out.add(reduce(w, s, steps), c);
  return out;
}

ConfluenceReport local_confluence_check(const RewriteSystem& rs, std::size_t max_overlap_len) {
  if (max_overlap_len < rs.max_lhs_length())
    throw DomainError("overlap bound " + std::to_string(max_overlap_len) +
                      " is below the longest left-hand side");
  ConfluenceReport report;
  const auto& rules = rs.rules();
  auto resolve = [&](const Word& w, std::size_t a, std::size_t pa, std::size_t b, std::size_t pb) {
    ++report.overlaps_checked;
    NcPoly left = rs.normal_form(rs.rewrite_at(w, {pa, a}));
    NcPoly right = rs.normal_form(rs.rewrite_at(w, {pb, b}));
    if (!(left == right)) report.unjoined.push_back({w, a, b, pa, pb, left, right});
  };
  for (std::size_t a = 0; a < rules.size(); ++a) {
    const Word& la = rules[a].lhs;
    for (std::size_t b = 0; b < rules.size(); ++b) {
      const Word& lb = rules[b].lhs;
      // proper suffix(la) == prefix(lb)
      for (std::size_t k = 1; k < std::min(la.size(), lb.size()); ++k) {
        if (la.size() + lb.size() - k > max_overlap_len) continue;
        if (la.compare(la.size() - k, k, lb, 0, k) != 0) continue;
        resolve(la + lb.substr(k), a, 0, b, la.size() - k);
      }
      // lb occurs inside la (for equal words only count each pair once)
      if (lb.size() > la.size() || a == b) continue;
      if (lb.size() == la.size() && b < a) continue;
      for (std::size_t p = 0; p + lb.size() <= la.size(); ++p)
        if (la.compare(p, lb.size(), lb) == 0) resolve(la, a, 0, b, p);
    }
  }
  return report;
}

}  // namespace homcheck
