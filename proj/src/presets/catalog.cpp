#include "homcheck/presets/catalog.hpp"

#include <charconv>

#include "homcheck/errors.hpp"

namespace homcheck::presets {

namespace {

ParamSpec sym(std::string name, std::string constraint = "invertible") {
  return {std::move(name), "symbol", std::move(constraint)};
}
ParamSpec index(std::string name) { return {std::move(name), "twist-index", ">= 0"}; }

std::vector<CatalogEntry> build_catalog() {
  return {
      {"qplane", "algebra", "Hom-quantum plane: y x = q x y, α(x) = λ1 x, α(y) = λ2 y",
       {sym("q"), sym("l1", ""), sym("l2", "")}},
      {"fermionic-3", "algebra", "Hom-fermionic 3-space: x_j x_i = -q x_i x_j, x_i^2 = 0",
       {sym("q"), sym("l1", ""), sym("l2", ""), sym("l3", "")}},
      {"uq-sl2", "bialgebra", "U_q(sl2) with α_λ: E -> λE, F -> λ^-1 F, K fixed",
       {sym("q", "not a root of unity"), sym("lambda")}},
      {"sl3", "bialgebra", "U_q(sl3) with α(E_i) = λ_i E_i (relations only)",
       {sym("q"), sym("l1"), sym("l2")}},
      {"sl4", "bialgebra", "U_q(sl4) with α(E_i) = λ_i E_i (relations only)",
       {sym("q"), sym("l1"), sym("l2"), sym("l3")}},
      {"z2", "braiding", "group bialgebra k[Z/2] with triangular R and bicharacter form", {}},
      {"v4", "braiding", "k[Z/2 x Z/2] with the swap a <-> b", {}},
      {"V(eps,n)", "module",
       "simple U_q(sl2)-module V(ε, n) twisted by α_ξ(v_i) = ξ λ^-i v_i",
       {{"eps", "sign", "+1 or -1"}, {"n", "count", ">= 1"}, sym("lambda"), sym("xi"),
        index("r"), index("k")}},
      {"verma(N)", "module", "Verma module M_q(η) on the window v0..vN, twisted as V(eps,n)",
       {sym("eta"), {"N", "count", ">= 2"}, sym("lambda"), sym("xi"), index("r"), index("k")}},
      {"Vn(n)", "module", "vector representation of U_q(sl_n), α_ξ(v_i) = ξ (λ1⋯λ_{i-1})^-1 v_i",
       sln_vector_parameters(0)},
      {"qplane-standard", "module-algebra",
       "quantum plane as U_q(sl2)-module algebra via q-derivatives, α(x) = ξx, α(y) = ξλ^-1 y",
       {sym("lambda"), sym("xi"), index("l"), index("k")}},
      {"qplane-nonstandard", "module-algebra",
       "non-standard U_q(sl2)-action on the quantum plane (0 < q < 1)",
       {sym("lambda"), {"xi", "symbol", "must be 1"}, index("l"), index("k")}},
  };
}

unsigned parse_count(std::string_view s, std::string_view call) {
  unsigned v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw DomainError("malformed module preset " + std::string(call));
  return v;
}

// "name(a,b)" -> name, {a, b}
std::pair<std::string, std::vector<std::string>> split_call(std::string_view call) {
  auto open = call.find('('), close = call.rfind(')');
  if (open == std::string_view::npos || close != call.size() - 1)
    throw DomainError("malformed module preset " + std::string(call));
  std::vector<std::string> args;
  std::string cur;
  for (char c : call.substr(open + 1, close - open - 1)) {
    if (c == ',') {
      args.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  args.push_back(cur);
  return {std::string(call.substr(0, open)), args};
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(std::string_view id) {
  for (const auto& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<ParamSpec> sln_vector_parameters(unsigned n) {
  std::vector<ParamSpec> out;
  if (n == 0) {
    out.push_back(sym("lambda1..lambda{n-1}"));
  } else {
    for (unsigned i = 1; i < n; ++i) out.push_back(sym("lambda" + std::to_string(i)));
  }
  out.push_back(sym("xi"));
  out.push_back(index("r"));
  out.push_back(index("k"));
  return out;
}

PresentationPtr presentation_by_id(std::string_view id) {
  if (id == "qplane") return quantum_space_presentation(2);
  if (id == "fermionic-3") return quantum_space_presentation(3, true);
  if (id == "uq-sl2") return uq_sl2_presentation();
  if (id == "sl3") return uq_sln_presentation(3);
  if (id == "sl4") return uq_sln_presentation(4);
  if (id == "z2") return z2_presentation();
  if (id == "v4") return v4_presentation();
  throw DomainError("unknown algebra preset '" + std::string(id) + "'");
}

LinMap twist_by_id(std::string_view id, const PresentationPtr& pres, const Scalar& lambda) {
  if (id == "uq-sl2") return uq_sl2_twist(pres, lambda);
  if (id == "sl3") return uq_sln_twist(pres, {lambda, lambda});
  if (id == "sl4") return uq_sln_twist(pres, {lambda, lambda, lambda});
  if (id == "z2") return LinMap::identity(pres);
  if (id == "v4") return v4_swap(pres);
  throw DomainError("no bialgebra preset '" + std::string(id) + "'");
}

HomBialgebra bialgebra_by_id(std::string_view id, const Scalar& lambda) {
  HomBialgebra h = id == "uq-sl2" ? uq_sl2_bialgebra()
                   : id == "z2"   ? z2_bialgebra()
                   : id == "v4"   ? v4_bialgebra()
                   : id == "sl3" || id == "sl4"
                       ? HomBialgebra(presentation_by_id(id),
                                      uq_sln_coproducts(presentation_by_id(id)), std::string(id))
                       : throw DomainError("no bialgebra preset '" + std::string(id) + "'");
  return yau_twist(h, twist_by_id(id, h.presentation_ptr(), lambda));
}

ModuleStructure module_by_call(std::string_view call, const Scalar& q, const Scalar& eta) {
  auto [name, args] = split_call(call);
  if (name == "V" && args.size() == 2) {
    int eps = args[0] == "1" || args[0] == "+1" ? 1 : args[0] == "-1" ? -1 : 0;
    if (!eps) throw DomainError("ε must be +1 or -1 in " + std::string(call));
    return module_V(eps, parse_count(args[1], call), q);
  }
  if (name == "verma" && args.size() == 1) return verma(eta, parse_count(args[0], call), q);
  if (name == "Vn" && args.size() == 1) return module_Vn(parse_count(args[0], call), q);
  throw DomainError("unknown module preset " + std::string(call));
}

namespace {

bool over_sl2(const ModuleStructure& m) { return m.presentation().name() == "uq-sl2"; }

std::vector<Scalar> sln_lambdas(const ModuleStructure& m, const std::vector<Scalar>& lambdas) {
  std::size_t r = over_sl2(m) ? 1 : m.presentation().alphabet().size() / 4;
  if (lambdas.size() == r) return lambdas;
  if (lambdas.size() == 1) return std::vector<Scalar>(r, lambdas[0]);
  throw DomainError("expected " + std::to_string(r) + " twist scalars");
}

}  // namespace

Operator module_alpha(const ModuleStructure& m, const Scalar& xi, const std::vector<Scalar>& lambdas) {
  if (over_sl2(m)) return alpha_xi(m.dim(), xi, sln_lambdas(m, lambdas)[0]);
  return alpha_xi_sln(xi, sln_lambdas(m, lambdas));
}

LinMap module_algebra_twist(const ModuleStructure& m, const std::vector<Scalar>& lambdas) {
  const auto& pres = m.algebra().presentation_ptr();
  if (over_sl2(m)) return uq_sl2_twist(pres, sln_lambdas(m, lambdas)[0]);
  return uq_sln_twist(pres, sln_lambdas(m, lambdas));
}

}  // namespace homcheck::presets
