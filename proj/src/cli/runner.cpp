#include "homcheck/cli/runner.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "homcheck/presets/catalog.hpp"
#include "homcheck/scalar/symbols.hpp"

namespace homcheck::cli {

namespace {

// ---------------------------------------------------------------------------
// Structures from declarations

struct Built {
  const SpecFile& spec;
  std::map<std::string, PresentationPtr> pres;

  PresentationPtr presentation(const std::string& name) {
    auto it = pres.find(name);
    if (it != pres.end()) return it->second;
    const AlgebraDecl& a = *spec.algebra(name);
    std::vector<RewriteRule> rules;
    for (const auto& [l, r] : a.rules) rules.push_back({l, r});
    std::vector<Relation> eqs;
    for (const auto& [l, r] : a.eqs) eqs.push_back({l, r});
    PresentationPtr p =
        rules.empty() && !eqs.empty()
            ? Presentation::relations_only(a.name, Alphabet(a.gens), std::move(eqs))
            : std::make_shared<Presentation>(a.name, Alphabet(a.gens), std::move(rules),
                                             std::move(eqs),
                                             a.budget.value_or(RewriteSystem::kDefaultBudget));
    return pres[name] = p;
  }

  LinMap morphism(const std::string& name, const std::string& algebra) {
    const MorphismDecl& m = *spec.morphism(name);
    if (m.algebra != algebra)
      throw StructureMismatch("morphism " + name + " acts on " + m.algebra + ", not on " + algebra);
    auto p = presentation(m.algebra);
    std::vector<NcPoly> images;
    for (std::size_t g = 0; g < p->alphabet().size(); ++g) images.push_back(word_poly(letter_word(g)));
    for (const auto& [g, img] : m.images) images[g] = img;
    return LinMap::multiplicative(p, std::move(images));
  }

  HomBialgebra bialgebra(const std::string& coalgebra) {
    const CoalgebraDecl& c = *spec.coalgebra(coalgebra);
    auto p = presentation(c.algebra);
    std::vector<TensorPoly<2>> d(p->alphabet().size());
    for (const auto& [g, t] : c.deltas) d[g] = t;
    return HomBialgebra(p, std::move(d), c.name);
  }

  ModuleStructure module(const std::string& name) {
    const ModuleDecl& m = *spec.module(name);
    auto p = presentation(m.algebra);
    std::vector<Operator> ops(p->alphabet().size(), Operator(m.basis.size()));
    for (const auto& e : m.actions) ops[e.gen][e.basis] = e.image;
    return ModuleStructure(p, m.basis, std::move(ops), m.name);
  }

  Operator module_alpha(const std::string& name) {
    const ModuleDecl& m = *spec.module(name);
    Operator a(m.basis.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = basis_vec(static_cast<long long>(i));
    for (const auto& [b, v] : m.alpha) a[b] = v;
    return a;
  }

  /// Algebra a check ultimately lives on.
  std::string algebra_of(const CheckDecl& c) const {
    const std::string& k = c.kind;
    if (k == "confluence" || k == "hom-algebra") return c.target;
    if (k == "hom-coalgebra" || k == "hom-bialgebra") return spec.coalgebra(c.target)->algebra;
    if (k == "relations" || k == "module" || k == "compat") return spec.module(c.target)->algebra;
    if (k == "qt") return spec.coalgebra(spec.rmatrix(c.target)->coalgebra)->algebra;
    if (k == "cobraided") return spec.coalgebra(spec.rform(c.target)->coalgebra)->algebra;
    return {};
  }
};

std::string describe(const CheckDecl& c) {
  std::string s = c.target;
  if (c.twist) s += " twist " + *c.twist;
  if (c.indices) s += " indices " + std::to_string(c.indices->first) + "," + std::to_string(c.indices->second);
  if (!c.derived.empty()) {
    s += " derived " + std::to_string(c.derived[0]);
    if (c.derived.size() > 1) s += "," + std::to_string(c.derived[1]);
  }
  if (c.degree) s += " degree " + std::to_string(*c.degree);
  if (c.word_len) s += " word-len " + std::to_string(*c.word_len);
  if (c.bound) s += " bound " + std::to_string(*c.bound);
  return s;
}

AxiomResult single(std::string id, bool ok, std::string witness = {}, std::string residual = {}) {
  AxiomResult a;
  a.id = std::move(id);
  a.instances = 1;
  a.failures = ok ? 0 : 1;
  a.verdicts = {ok ? Outcome::Pass : Outcome::Fail};
  if (!ok) {
    a.witness = std::move(witness);
    a.residual = std::move(residual);
  }
  return a;
}

Report confluence_report(const Presentation& p, std::optional<std::size_t> bound) {
  Report r;
  r.subject = "rewriting system of " + p.name();
  if (!p.has_rewriting() || p.rewriting().rules().empty()) {
    r.notes.push_back("relations only; no rewriting system to check");
    AxiomResult a;
    a.id = "local-confluence";
    r.axioms.push_back(a);
    return r;
  }
  const RewriteSystem& rs = p.rewriting();
  std::size_t b = std::max<std::size_t>(bound.value_or(6), rs.max_lhs_length());
  ConfluenceReport c = local_confluence_check(rs, b);
  AxiomResult a;
  a.id = "local-confluence";
  a.instances = c.overlaps_checked;
  a.failures = c.unjoined.size();
  if (!c.unjoined.empty()) {
    const CriticalPair& cp = c.unjoined.front();
    a.witness = "overlap " + p.alphabet().format(cp.overlap);
    a.residual = p.format(cp.via_a - cp.via_b);
  }
  r.axioms.push_back(a);
  r.notes.push_back("overlap bound " + std::to_string(b));
  return r;
}

Report compat_report(const ModuleStructure& m, const LinMap& alpha_a, const Operator& alpha_m,
                     std::size_t word_len) {
  Report r;
  r.subject = "α_M(a m) = α_A(a) α_M(m) on " + m.name();
  auto g = generator_compat_check(m, alpha_a, alpha_m);
  auto b = alpha_rho_check(m, alpha_a, alpha_m, word_len);
  auto first = [](const CompatCertificate& c) { return c.witnesses.empty() ? std::string() : c.witnesses.front(); };
  r.axioms.push_back(single("generator-compat", g.granted, first(g)));
  r.axioms.push_back(single("alpha-rho-words", b.granted, first(b)));
  r.notes.push_back(std::string("generator and word verdicts ") + (g.granted == b.granted ? "agree" : "disagree"));
  return r;
}

Report relation_report(const std::function<ModuleStructure()>& build) {
  try {
    return certify_relations(build());
  } catch (const RelationViolated& e) {
    Report r;
    r.subject = "relations";
    // the message reads "<instance> (residual <value>)"
    std::string msg = e.what(), witness = msg, residual = msg;
    if (auto at = msg.rfind(" (residual "); at != std::string::npos && msg.back() == ')') {
      witness = msg.substr(0, at);
      residual = msg.substr(at + 11, msg.size() - at - 12);
    }
    r.axioms.push_back(single("relation-vanishing", false, witness, residual));
    return r;
  }
}

// ---------------------------------------------------------------------------
// Built-in suites

struct Step {
  std::string structure;
  std::function<Report()> run;
};

std::size_t pick(const std::optional<std::size_t>& own, const std::optional<std::size_t>& flag,
                 std::size_t fallback) {
  return own ? *own : flag ? *flag : fallback;
}

std::vector<Step> preset_steps(const std::string& id, const CheckDecl& c, const RunOptions& o) {
  // parameters of the built-in suites; instantiated values replace symbols
  auto param = [&o](const char* name) {
    auto it = o.instantiate.find(name);
    return it == o.instantiate.end() ? Scalar::sym(name) : Scalar(it->second);
  };
  Scalar qv = param("q"), eta = param("eta"), lam = param("lambda"), xi = param("xi"), l1 = param("l1"), l2 = param("l2"), l3 = param("l3");
  auto [tn, tk] = c.indices ? *c.indices : o.twist ? *o.twist : std::make_pair(1u, 1u);
  std::vector<Step> steps;
  if (id == "qplane-hom") {
    std::size_t d = pick(c.degree, o.degree, 3);
    steps.push_back({"quantum plane degree " + std::to_string(d), [=] {
                       return check_hom_algebra(presets::quantum_space(2, {1, 2}, {{1, l1}, {2, l2}}, qv), d);
                     }});
  } else if (id == "fermionic-hom") {
    std::size_t d = pick(c.degree, o.degree, 3);
    steps.push_back({"fermionic 3-space degree " + std::to_string(d), [=] {
                       return check_hom_algebra(
                           presets::fermionic_space(3, {1, 2, 3}, {{1, l1}, {2, l2}, {3, l3}}, qv), d);
                     }});
  } else if (id == "uq-sl2-hom" || id == "uq-sl2-derived") {
    std::size_t d = pick(c.degree, o.degree, 2);
    unsigned lo = id == "uq-sl2-hom" ? 0 : 1, hi = id == "uq-sl2-hom" ? 0 : 2;
    for (unsigned n = lo; n <= hi; ++n)
      steps.push_back({"U_q(sl2) alpha_lambda derived " + std::to_string(n) + " degree " + std::to_string(d),
                       [=] { return check_hom_bialgebra(derived(presets::uq_sl2(lam, qv), n), d); }});
  } else if (id == "z2-braiding") {
    std::size_t d = pick(c.degree, o.degree, 2);
    for (unsigned n = 0; n <= 2; ++n)
      for (unsigned k = 0; k <= 2; ++k) {
        std::string nk = std::to_string(n) + "," + std::to_string(k);
        steps.push_back({"Z/2 R-matrix derived " + nk, [=] {
                           auto h = presets::z2_bialgebra();
                           return check_qt(derived_qt(QuasiTriangular(h, unit_poly(), presets::z2_R()), n, k), d);
                         }});
        steps.push_back({"Z/2 form derived " + nk, [=] {
                           auto h = presets::z2_bialgebra();
                           return check_cobraided(derived(h, n), derived_cobraided(h, presets::z2_form(), n, k), d);
                         }});
      }
  } else if (id == "modules-V" || id == "verma" || id == "sl3-vector") {
    std::size_t l = pick(c.word_len, o.word_len, 2);
    std::vector<std::string> calls;
    if (id == "modules-V") {
      calls = {"V(1,1)", "V(-1,1)", "V(1,2)", "V(-1,2)"};
    } else if (id == "verma") {
      calls = {"verma(" + std::to_string(o.window) + ")"};
    } else {
      calls = {"Vn(3)"};
    }
    for (const auto& call : calls) {
      steps.push_back({call + " relations", [=] { return certify_relations(presets::module_by_call(call, qv, eta)); }});
      std::string tw = std::to_string(tn) + "," + std::to_string(tk);
      steps.push_back({call + " twisted " + tw + " word-len " + std::to_string(l), [=] {
                         auto m = presets::module_by_call(call, qv, eta);
                         std::vector<Scalar> ls = call == "Vn(3)" ? std::vector<Scalar>{l1, l2} : std::vector<Scalar>{lam};
                         auto t = yau_twist_module(m, presets::module_algebra_twist(m, ls),
                                                   presets::module_alpha(m, xi, ls), tn, tk);
                         return check_module(t, l);
                       }});
    }
  } else if (id == "qplane-standard" || id == "qplane-nonstandard") {
    std::size_t l = pick(c.word_len, o.word_len, 2), d = pick(c.degree, o.degree, 3);
    bool standard = id == "qplane-standard";
    std::string tw = "l,k = " + std::to_string(tn) + "," + std::to_string(tk);
    auto build = [=] {
      return standard ? presets::qplane_standard(lam, xi, tn, tk, qv) : presets::qplane_nonstandard(lam, 1, tn, tk, qv);
    };
    steps.push_back({id + " " + tw, [=] { return check_module_hom_algebra(build(), l, d); }});
    steps.push_back({id + " " + tw + " via morphism", [=] { return mha_via_morphism_check(build(), l, d); }});
  }
  return steps;
}

// ---------------------------------------------------------------------------

CheckRecord execute(const std::string& suite, const std::string& kind, const std::string& structure,
                    const std::function<Report()>& f) {
  CheckRecord rec;
  rec.suite = suite;
  rec.check = kind;
  rec.structure = structure;
  try {
    rec.report = f();
    rec.status = rec.report.passed() ? CheckRecord::Pass : CheckRecord::Fail;
  } catch (const StepBudgetExceeded& e) {
    rec.status = CheckRecord::Budget;
    rec.error_kind = e.kind();
    rec.error = e.what();
  } catch (const Error& e) {
    rec.status = CheckRecord::Error;
    rec.error_kind = e.kind();
    rec.error = e.what();
  } catch (const std::exception& e) {
    rec.status = CheckRecord::Error;
    rec.error_kind = "InternalError";
    rec.error = e.what();
  }
  return rec;
}

}  // namespace

const std::vector<std::string>& preset_suite_ids() {
  static const std::vector<std::string> ids{
      "qplane-hom", "fermionic-hom", "uq-sl2-hom",      "uq-sl2-derived",    "z2-braiding",
      "modules-V",  "verma",         "sl3-vector",      "qplane-standard",   "qplane-nonstandard"};
  return ids;
}

void declare_preset_symbols() {
  for (const char* s : {"lambda", "xi", "l1", "l2", "l3", "eta"}) Symbols::index(s);
}

RunReport run(const SpecFile& parsed, const RunOptions& opts) {
  set_worker_count(opts.jobs);
  RunReport out;
  out.options = opts;

  std::map<std::size_t, Rational> point;
  for (const auto& [name, v] : opts.instantiate) {
    auto idx = Symbols::find(name);
    if (!idx) throw DomainError("cannot instantiate unknown parameter '" + name + "'");
    point[*idx] = v;
  }
  const SpecFile spec = point.empty() ? parsed : instantiate(parsed, point);
  Built b{spec, {}};

  // rewriting systems used by the suites are checked first
  if (!opts.trust_confluence) {
    std::vector<std::string> seen;
    for (const auto& s : spec.suites)
      for (const auto& c : s.checks) {
        std::string a = b.algebra_of(c);
        if (a.empty() || c.kind == "confluence" || std::count(seen.begin(), seen.end(), a)) continue;
        seen.push_back(a);
        out.records.push_back(execute(s.name, "confluence", a + " (automatic)", [&b, a] {
          return confluence_report(*b.presentation(a), std::nullopt);
        }));
      }
  }

  for (const auto& s : spec.suites)
    for (const auto& c : s.checks) {
      const std::string& k = c.kind;
      std::pair<unsigned, unsigned> idx = c.indices ? *c.indices : opts.twist.value_or(std::make_pair(0u, 0u));
      auto dn = [&](std::size_t i) { return c.derived.size() > i ? c.derived[i] : 0u; };
      std::function<Report()> f;
      if (k == "preset") {
        for (auto& step : preset_steps(c.target, c, opts))
          out.records.push_back(execute(s.name, "preset " + c.target, step.structure, step.run));
        continue;
      }
      if (k == "confluence") {
        f = [&b, &c] { return confluence_report(*b.presentation(c.target), c.bound); };
      } else if (k == "hom-algebra") {
        std::size_t d = pick(c.degree, opts.degree, 3);
        f = [&b, &c, d, dn] {
          HomAlgebra a(b.presentation(c.target), c.target);
          if (c.twist) a = yau_twist(a, b.morphism(*c.twist, c.target));
          return check_hom_algebra(derived(a, dn(0)), d);
        };
      } else if (k == "hom-coalgebra" || k == "hom-bialgebra") {
        std::size_t d = pick(c.degree, opts.degree, 2);
        bool bi = k == "hom-bialgebra";
        f = [&b, &c, d, dn, bi] {
          HomBialgebra h = b.bialgebra(c.target);
          if (c.twist) h = yau_twist(h, b.morphism(*c.twist, h.presentation().name()));
          h = derived(h, dn(0));
          return bi ? check_hom_bialgebra(h, d) : check_hom_coalgebra(h.coalgebra(), d);
        };
      } else if (k == "relations") {
        f = [&b, &c] { return relation_report([&] { return b.module(c.target); }); };
      } else if (k == "module") {
        std::size_t l = pick(c.word_len, opts.word_len, 2);
        f = [&b, &c, l, idx, dn] {
          ModuleStructure m = b.module(c.target);
          if (c.twist)
            m = yau_twist_module(m, b.morphism(*c.twist, m.presentation().name()), b.module_alpha(c.target),
                                 idx.first, idx.second);
          if (!c.derived.empty()) m = derive_module(m, dn(0), dn(1));
          return check_module(m, l);
        };
      } else if (k == "compat") {
        std::size_t l = pick(c.word_len, opts.word_len, 3);
        f = [&b, &c, l] {
          ModuleStructure m = b.module(c.target);
          if (!c.twist) throw DomainError("compat needs a twist morphism");
          return compat_report(m, b.morphism(*c.twist, m.presentation().name()), b.module_alpha(c.target), l);
        };
      } else if (k == "qt") {
        std::size_t d = pick(c.degree, opts.degree, 2);
        f = [&b, &c, d, dn] {
          const RMatrixDecl& r = *b.spec.rmatrix(c.target);
          HomBialgebra h = b.bialgebra(r.coalgebra);
          if (c.twist) h = yau_twist(h, b.morphism(*c.twist, h.presentation().name()));
          QuasiTriangular Q(h, r.unit.value_or(unit_poly()), r.R);
          if (!c.derived.empty()) Q = derived_qt(Q, dn(0), dn(1));
          return check_qt(Q, d);
        };
      } else {  // cobraided
        std::size_t d = pick(c.degree, opts.degree, 2);
        f = [&b, &c, d, dn] {
          const RFormDecl& fd = *b.spec.rform(c.target);
          HomBialgebra h = b.bialgebra(fd.coalgebra);
          if (c.twist) h = yau_twist(h, b.morphism(*c.twist, h.presentation().name()));
          CobraidForm::Table table;
          for (const auto& [xy, v] : fd.values) table[xy] = v;
          CobraidForm form(fd.window, table);
          if (!c.derived.empty()) {
            form = derived_cobraided(h, form, dn(0), dn(1));
            h = derived(h, dn(0));
          }
          return check_cobraided(h, form, d);
        };
      }
      out.records.push_back(execute(s.name, k, describe(c), f));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Output

std::size_t RunReport::passed() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(),
                                                [](const CheckRecord& r) { return r.status == CheckRecord::Pass; }));
}

std::size_t RunReport::skipped_instances() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.report.skipped();
  return n;
}

int RunReport::exit_code() const {
  bool budget = std::any_of(records.begin(), records.end(),
                            [](const CheckRecord& r) { return r.status == CheckRecord::Budget; });
  if (budget) return 3;
  if (passed() != records.size()) return 1;
  if (skipped_instances() > 0 && !options.allow_skips) return 1;
  return 0;
}

namespace {

const char* status_name(CheckRecord::Status s) {
  switch (s) {
    case CheckRecord::Pass: return "pass";
    case CheckRecord::Fail: return "fail";
    case CheckRecord::Error: return "error";
    case CheckRecord::Budget: return "budget-exceeded";
  }
  return "error";
}

std::string percent(std::size_t a, std::size_t b) {
  if (b == 0) return "100%";
  std::size_t p = a * 100 / b;
  if (p == 100 && a != b) p = 99;
  return std::to_string(p) + "%";
}

std::string mode_text(const RunOptions& o) {
  if (o.instantiate.empty()) return "symbolic";
  std::string s = "instantiate";
  bool first = true;
  for (const auto& [k, v] : o.instantiate) {
    s += (first ? " " : ",") + k + "=" + v.str();
    first = false;
  }
  return s;
}

std::string summary_line(const RunReport& r) {
  std::size_t n = r.records.size(), p = r.passed();
  std::string s = std::string(p == n ? "pass " : "fail ") + percent(p, n) + " (" + std::to_string(p) + "/" +
                  std::to_string(n) + " checks)";
  std::size_t sk = r.skipped_instances();
  if (sk) s += ", " + std::to_string(sk) + " skipped instances";
  return s;
}

}  // namespace

std::string emit_text(const RunReport& r) {
  std::ostringstream os;
  if (!r.options.source.empty()) os << "spec: " << r.options.source << "\n";
  os << "mode: " << mode_text(r.options) << "\n";
  for (const auto& rec : r.records) {
    os << "[" << status_name(rec.status) << "] " << rec.suite << ": " << rec.check << " " << rec.structure << "\n";
    if (rec.status == CheckRecord::Error || rec.status == CheckRecord::Budget) {
      os << "    " << rec.error_kind << ": " << rec.error << "\n";
      continue;
    }
    for (const auto& a : rec.report.axioms) {
      os << "    " << a.id << ": " << a.instances << " instances";
      if (a.failures) os << ", " << a.failures << " failed";
      if (a.skipped) os << ", " << a.skipped << " skipped";
      os << "\n";
      if (a.witness) os << "      first failure: " << *a.witness << "\n      residual: " << a.residual << "\n";
    }
    for (const auto& n : rec.report.notes) os << "    note: " << n << "\n";
  }
  os << "summary: " << summary_line(r) << "\n";
  return os.str();
}

std::string emit_json(const RunReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  ordered_json cfg;
  cfg["source"] = r.options.source;
  cfg["mode"] = mode_text(r.options);
  cfg["degree"] = r.options.degree ? ordered_json(*r.options.degree) : ordered_json();
  cfg["word_len"] = r.options.word_len ? ordered_json(*r.options.word_len) : ordered_json();
  cfg["window"] = r.options.window;
  cfg["twist"] = r.options.twist ? ordered_json::array({r.options.twist->first, r.options.twist->second})
                                 : ordered_json();
  cfg["trust_confluence"] = r.options.trust_confluence;
  cfg["allow_skips"] = r.options.allow_skips;
  j["config"] = cfg;
  ordered_json checks = ordered_json::array();
  for (const auto& rec : r.records) {
    ordered_json c;
    c["suite"] = rec.suite;
    c["check"] = rec.check;
    c["structure"] = rec.structure;
    c["verdict"] = status_name(rec.status);
    if (rec.status == CheckRecord::Error || rec.status == CheckRecord::Budget) {
      c["error"] = {{"kind", rec.error_kind}, {"message", rec.error}};
    } else {
      ordered_json axioms = ordered_json::array();
      for (const auto& a : rec.report.axioms) {
        ordered_json x;
        x["axiom"] = a.id;
        x["instances"] = a.instances;
        x["failures"] = a.failures;
        x["skipped"] = a.skipped;
        x["verdict"] = a.passed() ? "pass" : "fail";
        if (a.witness) {
          x["instance"] = *a.witness;
          x["residual"] = a.residual;
        }
        axioms.push_back(x);
      }
      c["axioms"] = axioms;
      c["notes"] = rec.report.notes;
    }
    checks.push_back(c);
  }
  j["checks"] = checks;
  j["summary"] = {{"checks", r.records.size()},
                  {"passed", r.passed()},
                  {"failed", r.records.size() - r.passed()},
                  {"skipped_instances", r.skipped_instances()},
                  {"pass_rate", percent(r.passed(), r.records.size())},
                  {"exit_code", r.exit_code()}};
  return j.dump(2) + "\n";
}

}  // namespace homcheck::cli
