#include "homcheck/repr/mha.hpp"

#include <mutex>

#include "homcheck/errors.hpp"

namespace homcheck {

NcPoly transduce(const ActionTransducer& t, const Word& x, const NcPoly& a) {
  NcPoly cur = a;
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    NcPoly next;
    for (const auto& [m, c] : cur) next.add(t.rule(letter_id(*it), m), c);
    cur = std::move(next);
  }
  return cur;
}

std::map<std::pair<std::size_t, Word>, NcPoly> materialize_action(const ActionTransducer& t,
                                                                 const HomBialgebra& h0,
                                                                 std::size_t degree) {
  if (!(h0.exponents() == Exponents{}))
    throw DomainError("materialize_action expects an ordinary bialgebra");
  const Presentation& a = *t.carrier;
  std::map<std::pair<std::size_t, Word>, NcPoly> table;

  std::function<NcPoly(std::size_t, const Word&)> gen_act;
  auto word_act = [&](const Word& x, const NcPoly& p) {
    NcPoly cur = p;
    for (auto it = x.rbegin(); it != x.rend(); ++it) {
      NcPoly next;
      for (const auto& [m, c] : cur) next.add(gen_act(letter_id(*it), m), c);
      cur = std::move(next);
    }
    return cur;
  };
  gen_act = [&](std::size_t g, const Word& w) -> NcPoly {
    if (w.size() <= 1) return t.rule(g, w);
    auto it = table.find({g, w});
    if (it != table.end()) return it->second;
    // g(w' z) = Σ (g1 w')(g2 z)
    Word head = w.substr(0, w.size() - 1), tail = w.substr(w.size() - 1);
    NcPoly out;
    for (const auto& [k, c] : h0.comul(word_poly(letter_word(g))))
      out.add(a.mul(word_act(k[0], word_poly(head)), word_act(k[1], word_poly(tail))), c);
    table.emplace(std::make_pair(g, w), out);
    return out;
  };

  std::map<std::pair<std::size_t, Word>, NcPoly> result;
  for (std::size_t g = 0; g < t.acting->alphabet().size(); ++g)
    for (const auto& w : a.normal_words(degree)) result.emplace(std::make_pair(g, w), gen_act(g, w));
  return result;
}

// ---------------------------------------------------------------------------

struct ModuleHomAlgebra::Cache {
  std::mutex mu;
  std::map<std::pair<Word, Word>, NcPoly> words;
};

ModuleHomAlgebra::ModuleHomAlgebra(HomBialgebra h0, HomAlgebra a0, ActionTransducer t)
    : h_(std::move(h0)),
      a_(std::move(a0)),
      t_(std::make_shared<const ActionTransducer>(std::move(t))),
      cache_(std::make_shared<Cache>()) {
  if (!(h_.exponents() == Exponents{}) || !(a_.exponents() == Exponents{}))
    throw DomainError("an untwisted module-algebra needs ordinary H and A");
  if (!(t_->acting->alphabet() == h_.presentation().alphabet()) ||
      !(t_->carrier->alphabet() == a_.presentation().alphabet()))
    throw StructureMismatch("transducer '" + t_->name + "' does not match " + h_.name() + " / " +
                            a_.name());
}

NcPoly ModuleHomAlgebra::core_act(const Word& x, const Word& monomial) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->words.find({x, monomial});
    if (it != cache_->words.end()) return it->second;
  }
  NcPoly out = transduce(*t_, x, word_poly(monomial));
  std::lock_guard lock(cache_->mu);
  cache_->words.emplace(std::make_pair(x, monomial), out);
  return out;
}

NcPoly ModuleHomAlgebra::act_shifted(const NcPoly& x, const NcPoly& a, unsigned extra) const {
  NcPoly xs = h_.algebra().alpha_base_pow(x, v_ + extra);
  NcPoly out;
  for (const auto& [w, c] : xs)
    for (const auto& [m, d] : a) out.add(core_act(w, m), c * d);
  return a_.alpha_base_pow(out, u_);
}

NcPoly ModuleHomAlgebra::act(const NcPoly& x, const NcPoly& a) const { return act_shifted(x, a, 0); }

// ---------------------------------------------------------------------------

Report certify_relations(const ModuleHomAlgebra& s, std::size_t degree) {
  const auto& hp = s.bialgebra().presentation();
  auto rels = hp.relations();
  auto monos = s.algebra().presentation().normal_words(degree);
  std::size_t nm = monos.size();
  Report rep;
  rep.subject = "relations of " + hp.name() + " on " + s.transducer().name;
  rep.axioms.push_back(run_instances(
      "relation-vanishing", rels.size() * nm,
      [&](std::size_t idx) {
        const auto& rel = rels[idx / nm];
        const Word& m = monos[idx % nm];
        NcPoly r;
        for (const auto& [w, c] : rel.lhs) r.add(s.core_act(w, m), c);
        for (const auto& [w, c] : rel.rhs) r.add(s.core_act(w, m), -c);
        return r.is_zero() ? Outcome::pass() : Outcome::fail(s.algebra().presentation().format(r));
      },
      [&](std::size_t idx) {
        const auto& rel = rels[idx / nm];
        return "relation " + hp.format(rel.lhs) + " = " + hp.format(rel.rhs) + " on " +
               s.algebra().presentation().alphabet().format(monos[idx % nm]);
      }));
  return rep;
}

NcPoly mha_residual(const ModuleHomAlgebra& s, const NcPoly& x, const NcPoly& a, const NcPoly& b) {
  const auto& h = s.bialgebra();
  const auto& A = s.algebra();
  NcPoly out = s.act(h.alpha(x, 2), A.mul(a, b));
  for (const auto& [t, c] : h.comul(x))
    out.add(A.mul(s.act(word_poly(t[0]), a), s.act(word_poly(t[1]), b)), -c);
  return out;
}

namespace {

struct Instances {
  std::vector<Word> words, monos;
  std::size_t nw, nm;
  Instances(const ModuleHomAlgebra& s, std::size_t word_len, std::size_t degree)
      : words(s.bialgebra().presentation().normal_words(word_len)),
        monos(s.algebra().presentation().normal_words(degree)),
        nw(words.size()),
        nm(monos.size()) {}
  // (x, a, b) row-major
  std::string describe(const ModuleHomAlgebra& s, std::size_t idx) const {
    const auto& ha = s.bialgebra().presentation().alphabet();
    const auto& aa = s.algebra().presentation().alphabet();
    return "x=" + ha.format(words[idx / (nm * nm)]) + ", a=" + aa.format(monos[(idx / nm) % nm]) +
           ", b=" + aa.format(monos[idx % nm]);
  }
};

Outcome verdict(const NcPoly& r, const Presentation& p) {
  return r.is_zero() ? Outcome::pass() : Outcome::fail(p.format(r));
}

}  // namespace

Report check_module_hom_algebra(const ModuleHomAlgebra& s, std::size_t word_len,
                                std::size_t degree) {
  Instances in(s, word_len, degree);
  const auto& h = s.bialgebra();
  const auto& A = s.algebra();
  const auto& ap = A.presentation();
  const auto& ha = h.presentation().alphabet();
  Report rep;
  auto [n, k] = s.twist_indices();
  rep.subject = s.transducer().name + " (" + to_string(s.provenance()) + ", n=" +
                std::to_string(n) + ", k=" + std::to_string(k) + ")";
  rep.axioms.push_back(certify_relations(s, degree).axioms.front());

  rep.axioms.push_back(run_instances(
      "module-multiplicativity", in.nw * in.nm,
      [&](std::size_t idx) {
        NcPoly x = word_poly(in.words[idx / in.nm]), a = word_poly(in.monos[idx % in.nm]);
        return verdict(A.alpha(s.act(x, a)) - s.act(h.alpha(x), A.alpha(a)), ap);
      },
      [&](std::size_t idx) {
        return "x=" + ha.format(in.words[idx / in.nm]) +
               ", a=" + ap.alphabet().format(in.monos[idx % in.nm]);
      }));

  rep.axioms.push_back(run_instances(
      "module-hom-associativity", in.nw * in.nw * in.nm,
      [&](std::size_t idx) {
        NcPoly x = word_poly(in.words[idx / (in.nw * in.nm)]);
        NcPoly y = word_poly(in.words[(idx / in.nm) % in.nw]);
        NcPoly a = word_poly(in.monos[idx % in.nm]);
        return verdict(s.act(h.alpha(x), s.act(y, a)) - s.act(h.mul(x, y), A.alpha(a)), ap);
      },
      [&](std::size_t idx) {
        return "x=" + ha.format(in.words[idx / (in.nw * in.nm)]) +
               ", y=" + ha.format(in.words[(idx / in.nm) % in.nw]) +
               ", a=" + ap.alphabet().format(in.monos[idx % in.nm]);
      }));

  rep.axioms.push_back(run_instances(
      "module-hom-algebra", in.nw * in.nm * in.nm,
      [&](std::size_t idx) {
        NcPoly x = word_poly(in.words[idx / (in.nm * in.nm)]);
        NcPoly a = word_poly(in.monos[(idx / in.nm) % in.nm]), b = word_poly(in.monos[idx % in.nm]);
        return verdict(mha_residual(s, x, a, b), ap);
      },
      [&](std::size_t idx) { return in.describe(s, idx); }));
  for (const auto& note : s.transducer().notes) rep.notes.push_back(note);
  return rep;
}

Report mha_via_morphism_check(const ModuleHomAlgebra& s, std::size_t word_len, std::size_t degree) {
  Instances in(s, word_len, degree);
  const auto& h = s.bialgebra();
  const auto& A = s.algebra();
  unsigned shift = 2 * h.exponents().m;  // ρ^{2,0} = ρ ∘ (α_H² ⊗ Id)
  Report rep;
  rep.subject = s.transducer().name + ": μ_A as a morphism of H-modules";
  rep.axioms.push_back(run_instances(
      "multiplication-is-module-morphism", in.nw * in.nm * in.nm,
      [&](std::size_t idx) {
        NcPoly x = word_poly(in.words[idx / (in.nm * in.nm)]);
        NcPoly a = word_poly(in.monos[(idx / in.nm) % in.nm]), b = word_poly(in.monos[idx % in.nm]);
        NcPoly lhs = s.act_shifted(x, A.mul(a, b), shift);
        // ρ_AA(x, a ⊗ b) in A ⊗ A, then μ_A
        TensorPoly<2> raa;
        for (const auto& [t, c] : h.comul(x))
          raa.add(tensor_of<2>({s.act(word_poly(t[0]), a), s.act(word_poly(t[1]), b)}), c);
        NcPoly rhs;
        for (const auto& [t, c] : raa) rhs.add(A.mul(word_poly(t[0]), word_poly(t[1])), c);
        return verdict(lhs - rhs, A.presentation());
      },
      [&](std::size_t idx) { return in.describe(s, idx); }));
  return rep;
}

ModuleHomAlgebra derive_mha(const ModuleHomAlgebra& s, unsigned n, unsigned k) {
  if (n == 0 && k == 0) return s;
  if (k >= 31) throw DomainError("derivation index too large");
  ModuleHomAlgebra out = s;
  out.h_ = derived(s.h_, k);
  out.a_ = derived(s.a_, k);
  unsigned p = 1u << k;
  out.u_ = s.u_ + s.a_.exponents().m * (p - 1);
  out.v_ = s.v_ + s.h_.exponents().m * n;
  out.n_ = n;
  out.k_ = k;
  out.prov_ = Provenance::HomNative;
  return out;
}

namespace {

CompatCertificate mha_compat_on(const ModuleHomAlgebra& s, const LinMap& alpha_h,
                                const LinMap& alpha_a, const std::vector<Word>& words,
                                std::size_t degree) {
  if (s.provenance() != Provenance::Untwisted)
    throw DomainError("compatibility is checked on an untwisted module-algebra");
  const auto& ap = s.algebra().presentation();
  const auto& ha = s.bialgebra().presentation().alphabet();
  CompatCertificate cert;
  for (const auto& x : words) {
    bool reported = false;
    for (const auto& m : ap.normal_words(degree)) {
      NcPoly lhs = alpha_a.apply(s.core_act(x, m));
      NcPoly rhs;
      NcPoly am = alpha_a.apply(m);
      for (const auto& [w, c] : alpha_h.apply(x))
        for (const auto& [mm, d] : am) rhs.add(s.core_act(w, mm), c * d);
      ++cert.checked;
      NcPoly r = lhs - rhs;
      if (!r.is_zero()) {
        cert.granted = false;
        if (!reported)
          cert.witnesses.push_back("a=" + ha.format(x) + ", m=" + ap.alphabet().format(m) +
                                   ": residual " + ap.format(r));
        reported = true;
      }
    }
  }
  return cert;
}

}  // namespace

CompatCertificate generator_compat_check(const ModuleHomAlgebra& s, const LinMap& alpha_h,
                                         const LinMap& alpha_a, std::size_t degree) {
  std::vector<Word> gens;
  for (std::size_t g = 0; g < s.bialgebra().presentation().alphabet().size(); ++g)
    gens.push_back(letter_word(g));
  return mha_compat_on(s, alpha_h, alpha_a, gens, degree);
}

CompatCertificate alpha_rho_check(const ModuleHomAlgebra& s, const LinMap& alpha_h,
                                  const LinMap& alpha_a, std::size_t word_len, std::size_t degree) {
  return mha_compat_on(s, alpha_h, alpha_a, s.bialgebra().presentation().normal_words(word_len),
                       degree);
}

ModuleHomAlgebra yau_twist_mha(const ModuleHomAlgebra& s, const LinMap& alpha_h,
                               const LinMap& alpha_a, unsigned n, unsigned k,
                               std::size_t compat_degree) {
  if (s.prov_ != Provenance::Untwisted)
    throw DomainError("yau_twist_mha expects an untwisted module-algebra");
  if (k >= 31) throw DomainError("derivation index too large");
  HomBialgebra h = yau_twist(s.h_, alpha_h);
  HomAlgebra a = yau_twist(s.a_, alpha_a);
  CompatCertificate cert = generator_compat_check(s, alpha_h, alpha_a, compat_degree);
  if (!cert.granted)
    throw CompatibilityFailed("α_A∘ρ ≠ ρ∘(α_H⊗α_A) at " + cert.witnesses.front());
  ModuleHomAlgebra out = s;
  out.h_ = derived(h, k);
  out.a_ = derived(a, k);
  unsigned p = 1u << k;
  out.u_ = p;
  out.v_ = n;
  out.n_ = n;
  out.k_ = k;
  out.prov_ = Provenance::YauTwisted;
  return out;
}

}  // namespace homcheck
