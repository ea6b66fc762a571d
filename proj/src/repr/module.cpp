#include "homcheck/repr/module.hpp"

#include <map>
#include <mutex>

#include "homcheck/errors.hpp"

namespace homcheck {

// ---------------------------------------------------------------------------
// HomModule

HomModule::HomModule(std::vector<std::string> labels, std::vector<Vec> alpha)
    : labels_(std::move(labels)), alpha_(std::move(alpha)) {
  if (alpha_.empty())
    for (std::size_t i = 0; i < labels_.size(); ++i) alpha_.push_back(basis_vec(i));
  if (alpha_.size() != labels_.size())
    throw DomainError("α_M table has " + std::to_string(alpha_.size()) + " images for " +
                      std::to_string(labels_.size()) + " basis elements");
}

void HomModule::require_in_window(const Vec& v) const {
  for (const auto& [i, c] : v)
    if (i < 0 || i >= static_cast<long long>(dim()))
      throw WindowOverflow("index " + std::to_string(i) + " is outside the window v0..v" +
                           std::to_string(dim() - 1));
}

Vec HomModule::alpha(const Vec& v, unsigned times) const {
  Vec cur = v;
  for (unsigned t = 0; t < times; ++t) {
    require_in_window(cur);
    Vec next;
    for (const auto& [i, c] : cur) next.add(alpha_[i], c);
    cur = std::move(next);
  }
  require_in_window(cur);
  return cur;
}

std::string HomModule::format(const Vec& v) const {
  std::vector<std::string> terms;
  for (const auto& [i, c] : v) {
    std::string label = i >= 0 && i < static_cast<long long>(dim()) ? labels_[i]
                                                                     : "[" + std::to_string(i) + "]";
    terms.push_back(coefficient_prefix(c) + label);
  }
  return join_terms(terms);
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Untwisted: return "untwisted";
    case Provenance::HomNative: return "hom-native";
    case Provenance::YauTwisted: return "yau-twisted";
    case Provenance::Tensor: return "tensor";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// ModuleStructure

struct ModuleStructure::Core {
  HomModule base;  // labels and base α_M
  std::vector<Operator> ops;
  // tensor product core
  std::shared_ptr<const HomBialgebra> h;
  std::shared_ptr<const ModuleStructure> left, right;

  mutable std::mutex mu;
  mutable std::map<std::pair<Word, long long>, Vec> cache;

  Vec apply_op(std::size_t g, const Vec& v) const {
    base.require_in_window(v);
    Vec out;
    for (const auto& [i, c] : v) out.add(ops[g][i], c);
    return out;
  }

  Vec act(const Word& w, long long i) const {
    {
      std::lock_guard lock(mu);
      auto it = cache.find({w, i});
      if (it != cache.end()) return it->second;
    }
    Vec out;
    if (h) {
      long long dn = static_cast<long long>(right->dim());
      for (const auto& [k, c] : h->comul(word_poly(w))) {
        Vec a = left->act(k[0], i / dn), b = right->act(k[1], i % dn);
        for (const auto& [ia, ca] : a)
          for (const auto& [ib, cb] : b) out.add(ia * dn + ib, c * ca * cb);
      }
    } else {
      out = basis_vec(i);
      for (auto it = w.rbegin(); it != w.rend(); ++it) out = apply_op(letter_id(*it), out);
    }
    base.require_in_window(out);
    std::lock_guard lock(mu);
    cache.emplace(std::make_pair(w, i), out);
    return out;
  }
};

namespace {

void check_operators(const Presentation& pres, std::size_t dim, const std::vector<Operator>& ops) {
  if (ops.size() != pres.alphabet().size())
    throw DomainError("expected " + std::to_string(pres.alphabet().size()) +
                      " generator operators, got " + std::to_string(ops.size()));
  for (std::size_t g = 0; g < ops.size(); ++g)
    if (ops[g].size() != dim)
      throw DomainError("operator of " + pres.alphabet().name(g) + " has " +
                        std::to_string(ops[g].size()) + " columns, expected " + std::to_string(dim));
}

}  // namespace

ModuleStructure::ModuleStructure(PresentationPtr pres, std::vector<std::string> labels,
                                 std::vector<Operator> ops, std::string name)
    : acting_(pres), name_(std::move(name)) {
  check_operators(*pres, labels.size(), ops);
  auto core = std::make_shared<ModuleStructure::Core>();
  core->base = HomModule(std::move(labels));
  core->ops = std::move(ops);
  core_ = std::move(core);
  if (name_.empty()) name_ = "module over " + pres->name();
  Report r = certify_relations(*this);
  if (!r.passed()) {
    const auto& a = r.axioms.front();
    throw RelationViolated(*a.witness + " (residual " + a.residual + ")");
  }
}

ModuleStructure::ModuleStructure(std::shared_ptr<const Core> core, HomAlgebra acting,
                                 std::string name)
    : core_(std::move(core)), acting_(std::move(acting)), name_(std::move(name)) {}

std::size_t ModuleStructure::dim() const { return core_->base.dim(); }
const std::vector<std::string>& ModuleStructure::labels() const { return core_->base.labels(); }
const std::vector<Operator>& ModuleStructure::generator_operators() const { return core_->ops; }
std::string ModuleStructure::format(const Vec& v) const { return core_->base.format(v); }

HomModule ModuleStructure::carrier() const {
  std::vector<Vec> table;
  for (std::size_t i = 0; i < dim(); ++i) {
    try {
      table.push_back(alpha(basis_vec(i)));
    } catch (const WindowOverflow&) {
      table.push_back(basis_vec(static_cast<long long>(dim())));  // marks the overflow
    }
  }
  return HomModule(labels(), std::move(table));
}

Vec ModuleStructure::core_act(const Word& a, long long basis) const { return core_->act(a, basis); }

Vec ModuleStructure::act(const Word& a, long long basis) const {
  NcPoly x = acting_.alpha_base_pow(word_poly(a), v_);
  Vec out;
  for (const auto& [w, c] : x) out.add(core_->act(w, basis), c);
  return core_->base.alpha(out, u_);
}

Vec ModuleStructure::act(const NcPoly& a, const Vec& m) const {
  core_->base.require_in_window(m);
  Vec out;
  for (const auto& [w, c] : a)
    for (const auto& [i, d] : m) out.add(act(w, i), c * d);
  return out;
}

Vec ModuleStructure::alpha(const Vec& m, unsigned times) const {
  return core_->base.alpha(m, w_ * times);
}

// ---------------------------------------------------------------------------
// Checks

namespace {

std::vector<Word> instance_words(const Presentation& p, std::size_t len) {
  return p.normal_words(len);
}

}  // namespace

Report certify_relations(const ModuleStructure& m) {
  const auto& pres = m.presentation();
  auto rels = pres.relations();
  std::size_t dim = m.dim();
  Report rep;
  rep.subject = "relations of " + pres.name() + " on " + m.name();
  auto residual = [&](std::size_t idx) {
    const auto& rel = rels[idx / dim];
    long long i = static_cast<long long>(idx % dim);
    Vec out;
    for (const auto& [w, c] : rel.lhs) out.add(m.core_act(w, i), c);
    for (const auto& [w, c] : rel.rhs) out.add(m.core_act(w, i), -c);
    return out;
  };
  rep.axioms.push_back(run_instances(
      "relation-vanishing", rels.size() * dim,
      [&](std::size_t idx) {
        try {
          Vec r = residual(idx);
          return r.is_zero() ? Outcome::pass() : Outcome::fail(m.format(r));
        } catch (const WindowOverflow&) {
          return Outcome::skip();
        }
      },
      [&](std::size_t idx) {
        const auto& rel = rels[idx / dim];
        return "relation " + pres.format(rel.lhs) + " = " + pres.format(rel.rhs) + " on " +
               m.labels()[idx % dim];
      }));
  return rep;
}

Report check_module(const HomAlgebra& a, const ModuleStructure& m, std::size_t word_len) {
  auto words = instance_words(a.presentation(), word_len);
  std::size_t nw = words.size(), dim = m.dim();
  const auto& alph = a.presentation().alphabet();
  Report rep;
  rep.subject = m.name() + " (" + to_string(m.provenance()) + ") over " + a.name();

  rep.axioms.push_back(run_instances(
      "module-multiplicativity", nw * dim,
      [&](std::size_t idx) {
        const Word& x = words[idx / dim];
        long long i = static_cast<long long>(idx % dim);
        try {
          Vec lhs = m.alpha(m.act(x, i));
          Vec rhs = m.act(a.alpha(word_poly(x)), m.alpha(basis_vec(i)));
          Vec r = lhs - rhs;
          return r.is_zero() ? Outcome::pass() : Outcome::fail(m.format(r));
        } catch (const WindowOverflow&) {
          return Outcome::skip();
        }
      },
      [&](std::size_t idx) {
        return "a=" + alph.format(words[idx / dim]) + ", m=" + m.labels()[idx % dim];
      }));

  rep.axioms.push_back(run_instances(
      "module-hom-associativity", nw * nw * dim,
      [&](std::size_t idx) {
        const Word& x = words[idx / (nw * dim)];
        const Word& y = words[(idx / dim) % nw];
        long long i = static_cast<long long>(idx % dim);
        try {
          Vec lhs = m.act(a.alpha(word_poly(x)), m.act(y, i));
          Vec rhs = m.act(a.mul(word_poly(x), word_poly(y)), m.alpha(basis_vec(i)));
          Vec r = lhs - rhs;
          return r.is_zero() ? Outcome::pass() : Outcome::fail(m.format(r));
        } catch (const WindowOverflow&) {
          return Outcome::skip();
        }
      },
      [&](std::size_t idx) {
        return "a=" + alph.format(words[idx / (nw * dim)]) +
               ", b=" + alph.format(words[(idx / dim) % nw]) + ", m=" + m.labels()[idx % dim];
      }));
  if (rep.skipped())
    rep.notes.push_back(std::to_string(rep.skipped()) + " instances left the window v0..v" +
                        std::to_string(dim - 1) + " and were skipped");
  return rep;
}

ModuleStructure derive_module(const ModuleStructure& m, unsigned n, unsigned k) {
  if (n == 0 && k == 0) return m;
  if (k >= 31) throw DomainError("derivation index too large");
  ModuleStructure out(m.core_, derived(m.acting_, k), m.name_);
  unsigned p = 1u << k;
  out.u_ = m.u_ + m.w_ * (p - 1);
  out.v_ = m.v_ + m.acting_.exponents().m * n;
  out.w_ = m.w_ * p;
  out.n_ = n;
  out.k_ = k;
  out.prov_ = m.prov_ == Provenance::Tensor ? Provenance::Tensor : Provenance::HomNative;
  return out;
}

namespace {

CompatCertificate compat_on(const ModuleStructure& m, const LinMap& alpha_a,
                            const Operator& alpha_m, const std::vector<Word>& words) {
  if (m.provenance() != Provenance::Untwisted)
    throw DomainError("compatibility is checked on an untwisted module");
  HomModule am(m.labels(), alpha_m);
  const auto& alph = m.presentation().alphabet();
  CompatCertificate cert;
  for (const auto& x : words) {
    bool reported = false;
    for (std::size_t j = 0; j < m.dim(); ++j) {
      try {
        Vec lhs = am.alpha(m.core_act(x, j));
        Vec rhs;
        Vec mj = am.alpha(basis_vec(j));
        for (const auto& [w, c] : alpha_a.apply(x))
          for (const auto& [i, d] : mj) rhs.add(m.core_act(w, i), c * d);
        ++cert.checked;
        Vec r = lhs - rhs;
        if (!r.is_zero()) {
          cert.granted = false;
          if (!reported)
            cert.witnesses.push_back("a=" + alph.format(x) + ", m=" + m.labels()[j] +
                                     ": residual " + m.format(r));
          reported = true;
        }
      } catch (const WindowOverflow&) {
        ++cert.skipped;
      }
    }
  }
  return cert;
}

}  // namespace

CompatCertificate generator_compat_check(const ModuleStructure& m, const LinMap& alpha_a,
                                         const Operator& alpha_m) {
  std::vector<Word> gens;
  for (std::size_t g = 0; g < m.presentation().alphabet().size(); ++g) gens.push_back(letter_word(g));
  return compat_on(m, alpha_a, alpha_m, gens);
}

CompatCertificate alpha_rho_check(const ModuleStructure& m, const LinMap& alpha_a,
                                  const Operator& alpha_m, std::size_t word_len) {
  return compat_on(m, alpha_a, alpha_m, instance_words(m.presentation(), word_len));
}

ModuleStructure yau_twist_module(const ModuleStructure& m, const LinMap& alpha_a,
                                 const Operator& alpha_m, unsigned n, unsigned k) {
  if (m.prov_ != Provenance::Untwisted)
    throw DomainError("yau_twist_module expects an untwisted module");
  if (k >= 31) throw DomainError("derivation index too large");
  HomAlgebra twisted = yau_twist(HomAlgebra(m.acting_.presentation_ptr()), alpha_a);
  CompatCertificate cert = generator_compat_check(m, alpha_a, alpha_m);
  if (!cert.granted) throw CompatibilityFailed("α_M∘ρ ≠ ρ∘(α_A⊗α_M) at " + cert.witnesses.front());

  auto core = std::make_shared<ModuleStructure::Core>();
  core->base = HomModule(m.labels(), alpha_m);
  core->ops = m.core_->ops;
  ModuleStructure out(std::move(core), derived(twisted, k), m.name_);
  unsigned p = 1u << k;
  out.u_ = p;
  out.v_ = n;
  out.w_ = p;
  out.n_ = n;
  out.k_ = k;
  out.prov_ = Provenance::YauTwisted;
  return out;
}

ModuleStructure tensor_module(const HomBialgebra& h, const ModuleStructure& m,
                              const ModuleStructure& n) {
  auto same = [&](const HomAlgebra& a) {
    const auto& b = h.algebra();
    if (a.presentation().name() != b.presentation().name() ||
        !(a.presentation().alphabet() == b.presentation().alphabet()) ||
        !(a.exponents() == b.exponents()))
      return false;
    const auto& x = a.alpha_base();
    const auto& y = b.alpha_base();
    return x.mode() == y.mode() && x.images() == y.images() && x.table() == y.table();
  };
  if (!same(m.algebra()) || !same(n.algebra()))
    throw StructureMismatch("tensor_module: both modules must act through the algebra of " +
                            h.name());

  HomModule cm = m.carrier(), cn = n.carrier();
  long long dn = static_cast<long long>(cn.dim());
  std::vector<std::string> labels;
  std::vector<Vec> alpha;
  for (std::size_t i = 0; i < cm.dim(); ++i)
    for (std::size_t j = 0; j < cn.dim(); ++j) {
      labels.push_back(cm.labels()[i] + " @ " + cn.labels()[j]);
      Vec a = cm.alpha_table()[i], b = cn.alpha_table()[j], ab;
      for (const auto& [ia, ca] : a)
        for (const auto& [ib, cb] : b) {
          bool inside = ia < static_cast<long long>(cm.dim()) && ib < dn;
          ab.add(inside ? ia * dn + ib : static_cast<long long>(cm.dim()) * dn, ca * cb);
        }
      alpha.push_back(std::move(ab));
    }
  auto core = std::make_shared<ModuleStructure::Core>();
  core->base = HomModule(std::move(labels), std::move(alpha));
  core->h = std::make_shared<const HomBialgebra>(h);
  core->left = std::make_shared<const ModuleStructure>(m);
  core->right = std::make_shared<const ModuleStructure>(n);
  ModuleStructure out(std::move(core), h.algebra(), m.name() + " @ " + n.name());
  out.prov_ = Provenance::Tensor;
  return out;
}

}  // namespace homcheck
