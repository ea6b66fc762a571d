#include "homcheck/homstruct/homstruct.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "homcheck/errors.hpp"

namespace homcheck {

// ---------------------------------------------------------------------------
// TwistPowers

struct TwistPowers::Cache {
  std::shared_mutex mu;
  std::map<unsigned, std::unique_ptr<LinMap>> powers;
};

TwistPowers::TwistPowers(LinMap base) : base_(std::move(base)), cache_(std::make_shared<Cache>()) {}

const LinMap& TwistPowers::power(unsigned e) const {
  if (e == 1) return base_;
  {
    std::shared_lock lock(cache_->mu);
    auto it = cache_->powers.find(e);
    if (it != cache_->powers.end()) return *it->second;
  }
  auto p = std::make_unique<LinMap>(base_.power(e));
  std::unique_lock lock(cache_->mu);
  auto [it, inserted] = cache_->powers.emplace(e, std::move(p));
  return *it->second;
}

Exponents derived_exponents(Exponents e, unsigned n) {
  if (n >= 31) throw DomainError("derivation index too large");
  unsigned p = 1u << n;
  return {e.s + e.m * (p - 1), e.m * p};
}

namespace {

NcPoly apply_power(const TwistPowers& tp, const NcPoly& x, unsigned e) {
  if (e == 0) return x;
  return tp.power(e).apply(x);
}

}  // namespace

// ---------------------------------------------------------------------------
// HomAlgebra

HomAlgebra::HomAlgebra(PresentationPtr pres, std::string name)
    : HomAlgebra(pres, LinMap::identity(pres), Exponents{}, std::move(name)) {}

HomAlgebra::HomAlgebra(PresentationPtr pres, LinMap alpha_base, Exponents e, std::string name)
    : HomAlgebra(std::move(pres), std::make_shared<const TwistPowers>(std::move(alpha_base)), e,
                 std::move(name)) {}

HomAlgebra::HomAlgebra(PresentationPtr pres, std::shared_ptr<const TwistPowers> powers,
                       Exponents e, std::string name)
    : pres_(std::move(pres)), powers_(std::move(powers)), exp_(e), name_(std::move(name)) {
  if (exp_.m == 0) throw DomainError("twist exponent m must be >= 1");
  if (name_.empty()) name_ = pres_->name();
}

NcPoly HomAlgebra::mul(const NcPoly& a, const NcPoly& b) const {
  return apply_power(*powers_, pres_->mul(a, b), exp_.s);
}

NcPoly HomAlgebra::alpha(const NcPoly& x, unsigned times) const {
  return apply_power(*powers_, x, exp_.m * times);
}

NcPoly HomAlgebra::alpha_base_pow(const NcPoly& x, unsigned e) const {
  return apply_power(*powers_, x, e);
}

// ---------------------------------------------------------------------------
// HomCoalgebra

struct HomCoalgebra::DeltaTable {
  PresentationPtr pres;
  std::vector<TensorPoly<2>> gens;
  mutable std::shared_mutex mu;
  mutable std::unordered_map<Word, TensorPoly<2>> words;

  TensorPoly<2> of(const Word& w) const {
    if (w.empty()) return TensorPoly<2>::of({Word(), Word()});
    if (w.size() == 1) return gens.at(letter_id(w[0]));
    {
      std::shared_lock lock(mu);
      auto it = words.find(w);
      if (it != words.end()) return it->second;
    }
    TensorPoly<2> r =
        tensor_product_in_algebra<2>(of(w.substr(0, w.size() - 1)), gens.at(letter_id(w.back())), *pres);
    std::unique_lock lock(mu);
    words.emplace(w, r);
    return r;
  }
};

HomCoalgebra::HomCoalgebra(PresentationPtr pres, std::vector<TensorPoly<2>> delta_gens,
                           LinMap alpha_base, Exponents e, std::string name)
    : pres_(pres),
      powers_(std::make_shared<const TwistPowers>(std::move(alpha_base))),
      exp_(e),
      name_(std::move(name)) {
  if (delta_gens.size() != pres_->alphabet().size())
    throw DomainError("comultiplication must be given on every generator");
  auto table = std::make_shared<DeltaTable>();
  table->pres = pres_;
  for (auto& t : delta_gens) table->gens.push_back(tensor_nf<2>(t, *pres_));
  delta_gens_ = table;
  if (exp_.m == 0) throw DomainError("twist exponent m must be >= 1");
  if (name_.empty()) name_ = pres_->name();
  // Δ_base must respect the defining relations to be well defined on the quotient.
  if (pres_->has_rewriting()) {
    for (const auto& rel : pres_->relations()) {
      TensorPoly<2> diff = delta_base(rel.lhs) - delta_base(rel.rhs);
      if (!diff.is_zero())
        throw RelationViolated("comultiplication does not respect " + pres_->format(rel.lhs) +
                               " = " + pres_->format(rel.rhs) + " (residual " +
                               pres_->format<2>(diff) + ")");
    }
  }
}

HomCoalgebra::HomCoalgebra(PresentationPtr pres, std::shared_ptr<const DeltaTable> delta,
                           std::shared_ptr<const TwistPowers> powers, Exponents e, std::string name)
    : pres_(std::move(pres)),
      delta_gens_(std::move(delta)),
      powers_(std::move(powers)),
      exp_(e),
      name_(std::move(name)) {}

const std::vector<TensorPoly<2>>& HomCoalgebra::delta_generators() const {
  return delta_gens_->gens;
}

TensorPoly<2> HomCoalgebra::delta_base(const Word& w) const { return delta_gens_->of(w); }

TensorPoly<2> HomCoalgebra::delta_base(const NcPoly& x) const {
  TensorPoly<2> out;
  for (const auto& [w, c] : x) out.add(delta_gens_->of(w), c);
  return out;
}

TensorPoly<2> HomCoalgebra::comul(const NcPoly& x) const {
  return delta_base(apply_power(*powers_, x, exp_.s));
}

NcPoly HomCoalgebra::alpha(const NcPoly& x, unsigned times) const {
  return apply_power(*powers_, x, exp_.m * times);
}

NcPoly HomCoalgebra::alpha_base_pow(const NcPoly& x, unsigned e) const {
  return apply_power(*powers_, x, e);
}

// ---------------------------------------------------------------------------
// HomBialgebra

HomBialgebra::HomBialgebra(PresentationPtr pres, std::vector<TensorPoly<2>> delta_gens,
                           LinMap alpha_base, Exponents e, std::string name)
    : alg_(pres, alpha_base, e, name),
      coalg_(pres, std::move(delta_gens), alpha_base, e, name) {
  // share one power cache between both halves
  coalg_.powers_ = alg_.powers();
}

HomBialgebra::HomBialgebra(PresentationPtr pres, std::vector<TensorPoly<2>> delta_gens,
                           std::string name)
    : HomBialgebra(pres, std::move(delta_gens), LinMap::identity(pres), Exponents{},
                   std::move(name)) {}

// ---------------------------------------------------------------------------
// Twisting principles

namespace {

void require_untwisted(Exponents e) {
  if (!(e == Exponents{}))
    throw DomainError("yau_twist expects an untwisted structure (exponents (0,1))");
}

void require_algebra_endomorphism(const Presentation& pres, const LinMap& alpha) {
  if (alpha.mode() == LinMap::Mode::Multiplicative) {
    if (auto v = alpha.endomorphism_violation()) throw NotEndomorphism("relation " + *v);
    return;
  }
  // tabular: check α(ab) = α(a)α(b) on the window
  for (const auto& [a, ia] : alpha.table())
    for (const auto& [b, ib] : alpha.table()) {
      NcPoly lhs = alpha.apply(pres.nf(a + b));
      NcPoly rhs = pres.mul(ia, ib);
      if (!(lhs == rhs))
        throw NotEndomorphism("map is not multiplicative on (" + pres.alphabet().format(a) +
                              ", " + pres.alphabet().format(b) + ")");
    }
}

void require_coalgebra_morphism(const HomCoalgebra& c, const LinMap& alpha) {
  const auto& pres = c.presentation();
  std::vector<Word> keys;
  if (alpha.mode() == LinMap::Mode::Multiplicative) {
    for (std::size_t g = 0; g < pres.alphabet().size(); ++g) keys.push_back(letter_word(g));
  } else {
    for (const auto& [k, v] : alpha.table()) keys.push_back(k);
  }
  for (const auto& w : keys) {
    TensorPoly<2> lhs = apply_tensor<2>({&alpha, &alpha}, c.delta_base(w));
    TensorPoly<2> rhs = c.delta_base(alpha.apply(w));
    if (!(lhs == rhs))
      throw NotEndomorphism("map does not commute with the comultiplication on " +
                            pres.alphabet().format(w) + " (residual " +
                            pres.format<2>(lhs - rhs) + ")");
  }
}

}  // namespace

HomAlgebra yau_twist(const HomAlgebra& a, const LinMap& alpha) {
  require_untwisted(a.exponents());
  require_algebra_endomorphism(a.presentation(), alpha);
  return HomAlgebra(a.presentation_ptr(), alpha, Exponents{1, 1}, a.name());
}

HomCoalgebra yau_twist(const HomCoalgebra& c, const LinMap& alpha) {
  require_untwisted(c.exponents());
  require_coalgebra_morphism(c, alpha);
  return HomCoalgebra(c.presentation_ptr(), c.delta_table(),
                      std::make_shared<const TwistPowers>(alpha), Exponents{1, 1}, c.name());
}

HomBialgebra yau_twist(const HomBialgebra& h, const LinMap& alpha) {
  require_untwisted(h.exponents());
  require_algebra_endomorphism(h.presentation(), alpha);
  require_coalgebra_morphism(h.coalgebra(), alpha);
  auto powers = std::make_shared<const TwistPowers>(alpha);
  HomAlgebra a(h.presentation_ptr(), powers, Exponents{1, 1}, h.name());
  HomCoalgebra c(h.presentation_ptr(), h.coalgebra().delta_table(), powers, Exponents{1, 1},
                 h.name());
  return HomBialgebra(std::move(a), std::move(c));
}

HomAlgebra derived(const HomAlgebra& a, unsigned n) {
  return HomAlgebra(a.presentation_ptr(), a.powers(), derived_exponents(a.exponents(), n), a.name());
}

HomCoalgebra derived(const HomCoalgebra& c, unsigned n) {
  return HomCoalgebra(c.presentation_ptr(), c.delta_table(), c.powers(),
                      derived_exponents(c.exponents(), n), c.name());
}

HomBialgebra derived(const HomBialgebra& h, unsigned n) {
  return HomBialgebra(derived(h.alg_, n), derived(h.coalg_, n));
}

// ---------------------------------------------------------------------------
// Residuals

NcPoly hom_associativity_residual(const HomAlgebra& a, const NcPoly& x, const NcPoly& y,
                                  const NcPoly& z) {
  return a.mul(a.alpha(x), a.mul(y, z)) - a.mul(a.mul(x, y), a.alpha(z));
}

TensorPoly<3> hom_coassociativity_residual(const HomCoalgebra& c, const NcPoly& x) {
  TensorPoly<3> lhs, rhs;
  for (const auto& [k, v] : c.comul(x)) {
    auto a1 = tensor_of<1>({c.alpha(word_poly(k[0]))});
    auto a2 = tensor_of<1>({c.alpha(word_poly(k[1]))});
    lhs.add(tensor_join<1, 2>(a1, c.comul(word_poly(k[1]))), v);  // (α ⊗ Δ)Δ
    rhs.add(tensor_join<2, 1>(c.comul(word_poly(k[0])), a2), v);  // (Δ ⊗ α)Δ
  }
  return lhs - rhs;
}

TensorPoly<2> compatibility_residual(const HomBialgebra& h, const NcPoly& a, const NcPoly& b) {
  TensorPoly<2> lhs = h.comul(h.mul(a, b));
  TensorPoly<2> rhs = h.mul_tensor<2>(h.comul(a), h.comul(b));
  return lhs - rhs;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

std::string words_desc(const Presentation& p, std::initializer_list<const Word*> ws) {
  std::string s = "(";
  bool first = true;
  for (const Word* w : ws) {
    if (!first) s += ", ";
    first = false;
    s += p.alphabet().format(*w);
  }
  return s + ")";
}

void add_multiplicativity(Report& r, const HomAlgebra& a, const std::vector<Word>& W) {
  const auto& p = a.presentation();
  std::size_t n = W.size();
  r.axioms.push_back(run_instances(
      "multiplicativity", n * n,
      [&](std::size_t i) {
        NcPoly x = word_poly(W[i / n]), y = word_poly(W[i % n]);
        NcPoly res = a.alpha(a.mul(x, y)) - a.mul(a.alpha(x), a.alpha(y));
        return res.is_zero() ? Outcome::pass() : Outcome::fail(p.format(res));
      },
      [&](std::size_t i) { return words_desc(p, {&W[i / n], &W[i % n]}); }));
}

void add_hom_associativity(Report& r, const HomAlgebra& a, const std::vector<Word>& W) {
  const auto& p = a.presentation();
  std::size_t n = W.size();
  r.axioms.push_back(run_instances(
      "hom-associativity", n * n * n,
      [&](std::size_t i) {
        NcPoly res = hom_associativity_residual(a, word_poly(W[i / (n * n)]),
                                                word_poly(W[(i / n) % n]), word_poly(W[i % n]));
        return res.is_zero() ? Outcome::pass() : Outcome::fail(p.format(res));
      },
      [&](std::size_t i) {
        return words_desc(p, {&W[i / (n * n)], &W[(i / n) % n], &W[i % n]});
      }));
}

void add_coalgebra_axioms(Report& r, const HomCoalgebra& c, const std::vector<Word>& W) {
  const auto& p = c.presentation();
  r.axioms.push_back(run_instances(
      "comultiplicativity", W.size(),
      [&](std::size_t i) {
        NcPoly x = word_poly(W[i]);
        const LinMap& am = c.powers()->power(c.exponents().m);
        TensorPoly<2> res = apply_tensor<2>({&am, &am}, c.comul(x)) - c.comul(c.alpha(x));
        return res.is_zero() ? Outcome::pass() : Outcome::fail(p.format<2>(res));
      },
      [&](std::size_t i) { return words_desc(p, {&W[i]}); }));
  r.axioms.push_back(run_instances(
      "hom-coassociativity", W.size(),
      [&](std::size_t i) {
        TensorPoly<3> res = hom_coassociativity_residual(c, word_poly(W[i]));
        return res.is_zero() ? Outcome::pass() : Outcome::fail(p.format<3>(res));
      },
      [&](std::size_t i) { return words_desc(p, {&W[i]}); }));
}

std::string subject(const std::string& kind, const std::string& name, Exponents e) {
  return kind + " " + name + " [s=" + std::to_string(e.s) + ", m=" + std::to_string(e.m) + "]";
}

}  // namespace

Report check_hom_algebra(const HomAlgebra& a, std::size_t degree) {
  Report r;
  r.subject = subject("hom-algebra", a.name(), a.exponents());
  auto W = a.presentation().normal_words(degree);
  add_multiplicativity(r, a, W);
  add_hom_associativity(r, a, W);
  return r;
}

Report check_hom_coalgebra(const HomCoalgebra& c, std::size_t degree) {
  Report r;
  r.subject = subject("hom-coalgebra", c.name(), c.exponents());
  add_coalgebra_axioms(r, c, c.presentation().normal_words(degree));
  return r;
}

Report check_hom_bialgebra(const HomBialgebra& h, std::size_t degree) {
  Report r;
  r.subject = subject("hom-bialgebra", h.name(), h.exponents());
  const auto& p = h.presentation();
  auto W = p.normal_words(degree);
  add_multiplicativity(r, h.algebra(), W);
  add_hom_associativity(r, h.algebra(), W);
  add_coalgebra_axioms(r, h.coalgebra(), W);
  std::size_t n = W.size();
  r.axioms.push_back(run_instances(
      "compatibility", n * n,
      [&](std::size_t i) {
        TensorPoly<2> res = compatibility_residual(h, word_poly(W[i / n]), word_poly(W[i % n]));
        return res.is_zero() ? Outcome::pass() : Outcome::fail(p.format<2>(res));
      },
      [&](std::size_t i) { return words_desc(p, {&W[i / n], &W[i % n]}); }));
  return r;
}

}  // namespace homcheck
