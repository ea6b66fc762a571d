// homcheck: verify Hom-type structures described in spec files.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error, 3 resource
// budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "homcheck/cli/runner.hpp"
#include "homcheck/presets/catalog.hpp"
#include "homcheck/scalar/symbols.hpp"

using namespace homcheck;

namespace {

constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<unsigned, unsigned> parse_pair(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw DomainError("expected n,k but got '" + s + "'");
  return {static_cast<unsigned>(std::stoul(s.substr(0, comma))),
          static_cast<unsigned>(std::stoul(s.substr(comma + 1)))};
}

/// `instantiate q=3/2,l=2` (one or two words).
std::map<std::string, Rational> parse_mode(const std::vector<std::string>& words) {
  std::map<std::string, Rational> point;
  if (words.empty() || words[0] == "symbolic") {
    if (words.size() > 1) throw DomainError("symbolic mode takes no assignments");
    return point;
  }
  std::string head = words[0], rest;
  if (auto sp = head.find(' '); sp != std::string::npos) {
    rest = head.substr(sp + 1);
    head = head.substr(0, sp);
  }
  if (head != "instantiate") throw DomainError("unknown mode '" + head + "'");
  if (words.size() > 1) rest = words[1];
  if (rest.empty()) throw DomainError("instantiate needs assignments such as q=3/2,lambda=2");
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("malformed assignment '" + item + "'");
    try {
      point[item.substr(0, eq)] = Rational(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw DomainError("malformed rational in '" + item + "'");
    }
  }
  return point;
}

int report_input_error(const std::string& where, const Error& e) {
  std::cerr << (where.empty() ? "" : where + ":") << e.what() << " [" << e.kind() << "]\n";
  return kInputError;
}

std::string presets_text() {
  std::ostringstream os;
  for (const auto& e : presets::catalog()) {
    os << e.id << " (" << e.kind << "): " << e.summary << "\n";
    for (const auto& p : e.params) {
      os << "    " << p.name << " : " << p.kind;
      if (!p.constraint.empty()) os << ", " << p.constraint;
      os << "\n";
    }
  }
  os << "suites:";
  for (const auto& id : cli::preset_suite_ids()) os << " " << id;
  os << "\n";
  return os.str();
}

std::string presets_json() {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& e : presets::catalog()) {
    nlohmann::ordered_json params = nlohmann::ordered_json::array();
    for (const auto& p : e.params) params.push_back({{"name", p.name}, {"kind", p.kind}, {"constraint", p.constraint}});
    j.push_back({{"id", e.id}, {"kind", e.kind}, {"summary", e.summary}, {"params", params}});
  }
  return nlohmann::ordered_json({{"presets", j}, {"suites", cli::preset_suite_ids()}}).dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Hom-type algebraic structures"};
  app.require_subcommand(1);

  cli::RunOptions opts;
  std::string spec_path, format = "text";
  std::vector<std::string> mode = {"symbolic"};
  std::string twist, preset, module_call, expr, basis;
  std::optional<std::size_t> degree, word_len;

  auto add_session_flags = [&](CLI::App* c) {
    c->add_option("--degree", degree, "degree bound for algebra and coalgebra checks");
    c->add_option("--word-len", word_len, "length bound for acting words");
    c->add_option("--window", opts.window, "window size of Verma modules");
    c->add_option("--mode", mode, "symbolic | instantiate q=3/2,lambda=2")->expected(1, 2);
    c->add_option("--twist", twist, "default twist indices n,k");
    c->add_flag("--trust-confluence", opts.trust_confluence, "skip the automatic confluence checks");
    c->add_flag("--allow-skips", opts.allow_skips, "skipped instances do not fail the run");
    c->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "run every suite of a spec file");
  verify->add_option("spec", spec_path)->required();
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  add_session_flags(verify);

  auto* report = app.add_subcommand("report", "run a spec file and emit the structured report");
  report->add_option("spec", spec_path)->required();
  std::string report_format = "json";
  report->add_option("--format", report_format)->check(CLI::IsMember({"text", "json"}));
  add_session_flags(report);

  auto* fmt = app.add_subcommand("fmt", "print a spec file in canonical form");
  fmt->add_option("spec", spec_path)->required();

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("expr", expr)->required();
  nf->add_option("--preset", preset)->required();

  auto* act = app.add_subcommand("act", "action of a word on a module vector");
  act->add_option("word", expr)->required();
  act->add_option("vector", basis)->required();
  act->add_option("--module", module_call)->required();
  act->add_option("--twist", twist, "twist indices r,k (symbolic lambda, xi)");

  auto* comul = app.add_subcommand("comul", "comultiplication of an expression");
  comul->add_option("expr", expr)->required();
  comul->add_option("--preset", preset)->required();

  auto* list = app.add_subcommand("presets", "list presets with their parameters");
  list->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*list) {
      std::cout << (format == "json" ? presets_json() : presets_text());
      return 0;
    }
    if (*nf || *comul) {
      cli::declare_preset_symbols();
      auto pres = presets::presentation_by_id(preset);
      NcPoly p = cli::parse_poly(expr, pres->alphabet().names());
      if (*nf) {
        std::cout << pres->format(pres->nf(p)) << "\n";
      } else {
        HomBialgebra h = presets::bialgebra_by_id(preset, Scalar::sym("lambda"));
        std::cout << pres->format<2>(h.comul(pres->nf(p))) << "\n";
      }
      return 0;
    }
    if (*act) {
      cli::declare_preset_symbols();
      ModuleStructure m = presets::module_by_call(module_call);
      if (!twist.empty()) {
        auto [r, k] = parse_pair(twist);
        std::vector<Scalar> ls{Scalar::sym("lambda")};
        m = yau_twist_module(m, presets::module_algebra_twist(m, ls),
                             presets::module_alpha(m, Scalar::sym("xi"), ls), r, k);
      }
      NcPoly a = cli::parse_poly(expr, m.presentation().alphabet().names());
      NcPoly v = cli::parse_poly(basis, m.labels());
      Vec vec;
      for (const auto& [w, c] : v) {
        if (w.size() != 1) throw DomainError("'" + basis + "' is not a module vector");
        vec.add(static_cast<long long>(letter_id(w[0])), c);
      }
      std::cout << m.format(m.act(a, vec)) << "\n";
      return 0;
    }

    // verify / report / fmt
    std::string text;
    cli::SpecFile spec;
    try {
      text = read_file(spec_path);
      spec = cli::parse_spec(text);
    } catch (const Error& e) {
      return report_input_error(spec_path, e);
    }
    if (*fmt) {
      std::cout << cli::print_spec(spec);
      return 0;
    }
    cli::declare_preset_symbols();
    Symbols::seal();
    opts.source = spec_path;
    opts.degree = degree;
    opts.word_len = word_len;
    if (!twist.empty()) opts.twist = parse_pair(twist);
    opts.instantiate = parse_mode(mode);
    cli::RunReport r = cli::run(spec, opts);
    bool json = *report ? report_format == "json" : format == "json";
    std::cout << (json ? cli::emit_json(r) : cli::emit_text(r));
    return r.exit_code();
  } catch (const StepBudgetExceeded& e) {
    std::cerr << e.what() << " [" << e.kind() << "]\n";
    return 3;
  } catch (const Error& e) {
    return report_input_error("", e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
