#include "homcheck/ncalg/presentation.hpp"

#include <algorithm>

#include "homcheck/errors.hpp"

namespace homcheck {

Presentation::Presentation(std::string name, Alphabet alphabet, std::vector<RewriteRule> rules,
                           std::vector<Relation> extra_relations, std::size_t step_budget)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      rs_(std::make_shared<RewriteSystem>(alphabet_, std::move(rules), step_budget)),
      extra_(std::move(extra_relations)) {}

std::shared_ptr<Presentation> Presentation::relations_only(std::string name, Alphabet alphabet,
                                                           std::vector<Relation> relations) {
  std::shared_ptr<Presentation> p(new Presentation());
  p->name_ = std::move(name);
  p->alphabet_ = std::move(alphabet);
  p->extra_ = std::move(relations);
  return p;
}

const RewriteSystem& Presentation::rewriting() const {
  if (!rs_) throw DomainError("presentation '" + name_ + "' has no rewriting system");
  return *rs_;
}

std::vector<Relation> Presentation::relations() const {
  std::vector<Relation> out;
  if (rs_)
    for (const auto& r : rs_->rules()) out.push_back({word_poly(r.lhs), r.rhs});
  out.insert(out.end(), extra_.begin(), extra_.end());
  return out;
}

NcPoly Presentation::nf(const NcPoly& p) const { return rs_ ? rs_->normal_form(p) : p; }
NcPoly Presentation::nf(const Word& w) const { return rs_ ? rs_->normal_form(w) : word_poly(w); }

NcPoly Presentation::mul(const NcPoly& a, const NcPoly& b) const { return nf(concat(a, b)); }

bool Presentation::is_normal(const Word& w) const { return !rs_ || rs_->is_normal(w); }

std::vector<Word> Presentation::normal_words(std::size_t max_degree) const {
  // Subwords of normal words are normal, so extending normal words letter by
  // letter reaches all of them.
  std::vector<Word> out{Word()};
  std::vector<Word> layer{Word()};
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (std::size_t g = 0; g < alphabet_.size(); ++g) {
        Word x = w + letter_word(g);
        if (is_normal(x)) next.push_back(std::move(x));
      }
    std::sort(next.begin(), next.end(), DegLex());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace homcheck
