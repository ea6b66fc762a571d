#include "homcheck/repr/comodule.hpp"

#include "homcheck/errors.hpp"

namespace homcheck {

ComoduleStructure::ComoduleStructure(HomCoalgebra c, std::vector<std::string> labels,
                                     std::vector<CoVec> coaction, std::string name)
    : c_(std::move(c)), base_(std::move(labels)), table_(std::move(coaction)), name_(std::move(name)) {
  if (!(c_.exponents() == Exponents{}))
    throw DomainError("an untwisted comodule needs an ordinary coalgebra");
  if (table_.size() != base_.dim())
    throw DomainError("coaction table has " + std::to_string(table_.size()) + " entries for " +
                      std::to_string(base_.dim()) + " basis elements");
  for (const auto& t : table_)
    for (const auto& [k, v] : t) base_.require_in_window(basis_vec(k.second));
  if (name_.empty()) name_ = "comodule over " + c_.name();
}

CoVec ComoduleStructure::core_coact(const Vec& m) const {
  base_.require_in_window(m);
  CoVec out;
  for (const auto& [i, c] : m) out.add(table_[i], c);
  return out;
}

CoVec ComoduleStructure::coact(const Vec& m) const {
  CoVec out;
  for (const auto& [k, c] : core_coact(base_.alpha(m, u_)))
    for (const auto& [w, d] : c_.alpha_base_pow(word_poly(k.first), v_))
      out.add({w, k.second}, c * d);
  return out;
}

Vec ComoduleStructure::alpha(const Vec& m, unsigned times) const {
  return base_.alpha(m, w_ * times);
}

std::string ComoduleStructure::format(const CoVec& t) const {
  const auto& a = c_.presentation().alphabet();
  std::vector<std::string> terms;
  for (const auto& [k, c] : t)
    terms.push_back(coefficient_prefix(c) + a.format(k.first) + " @ " + base_.labels()[k.second]);
  return join_terms(terms);
}

std::string ComoduleStructure::format(const CoVec2& t) const {
  const auto& a = c_.presentation().alphabet();
  std::vector<std::string> terms;
  for (const auto& [k, c] : t)
    terms.push_back(coefficient_prefix(c) + a.format(std::get<0>(k)) + " @ " +
                    a.format(std::get<1>(k)) + " @ " + base_.labels()[std::get<2>(k)]);
  return join_terms(terms);
}

Report check_comodule(const HomCoalgebra& c, const ComoduleStructure& m) {
  std::size_t dim = m.dim();
  Report rep;
  rep.subject = m.name() + " (" + to_string(m.provenance()) + ") over " + c.name();
  auto describe = [&](std::size_t i) { return "m=" + m.labels()[i]; };

  rep.axioms.push_back(run_instances(
      "comodule-multiplicativity", dim,
      [&](std::size_t i) {
        CoVec lhs = m.coact(m.alpha(basis_vec(i)));
        CoVec rhs;
        for (const auto& [k, v] : m.coact(basis_vec(i)))
          for (const auto& [w, d] : c.alpha(word_poly(k.first)))
            for (const auto& [j, e] : m.alpha(basis_vec(k.second))) rhs.add({w, j}, v * d * e);
        CoVec r = lhs - rhs;
        return r.is_zero() ? Outcome::pass() : Outcome::fail(m.format(r));
      },
      describe));

  rep.axioms.push_back(run_instances(
      "comodule-hom-coassociativity", dim,
      [&](std::size_t i) {
        CoVec2 lhs, rhs;
        for (const auto& [k, v] : m.coact(basis_vec(i))) {
          NcPoly ac = c.alpha(word_poly(k.first));
          for (const auto& [k2, v2] : m.coact(basis_vec(k.second)))
            for (const auto& [w, d] : ac) lhs.add({w, k2.first, k2.second}, v * v2 * d);
          Vec am = m.alpha(basis_vec(k.second));
          for (const auto& [t, d] : c.comul(word_poly(k.first)))
            for (const auto& [j, e] : am) rhs.add({t[0], t[1], j}, v * d * e);
        }
        CoVec2 r = lhs - rhs;
        return r.is_zero() ? Outcome::pass() : Outcome::fail(m.format(r));
      },
      describe));
  return rep;
}

ComoduleStructure derive_comodule(const ComoduleStructure& m, unsigned n, unsigned k) {
  if (n == 0 && k == 0) return m;
  if (k >= 31) throw DomainError("derivation index too large");
  ComoduleStructure out = m;
  out.c_ = derived(m.c_, k);
  unsigned p = 1u << k;
  out.u_ = m.u_ + m.w_ * (p - 1);
  out.v_ = m.v_ + m.c_.exponents().m * n;
  out.w_ = m.w_ * p;
  out.prov_ = Provenance::HomNative;
  return out;
}

CompatCertificate comodule_compat_check(const ComoduleStructure& m, const LinMap& alpha_c,
                                        const Operator& alpha_m) {
  if (m.provenance() != Provenance::Untwisted)
    throw DomainError("compatibility is checked on an untwisted comodule");
  HomModule am(m.labels(), alpha_m);
  CompatCertificate cert;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    CoVec lhs = m.core_coact(am.alpha(basis_vec(i)));
    CoVec rhs;
    for (const auto& [k, v] : m.core_coact(basis_vec(i)))
      for (const auto& [w, d] : alpha_c.apply(k.first))
        for (const auto& [j, e] : am.alpha(basis_vec(k.second))) rhs.add({w, j}, v * d * e);
    ++cert.checked;
    CoVec r = lhs - rhs;
    if (!r.is_zero()) {
      cert.granted = false;
      cert.witnesses.push_back("m=" + m.labels()[i] + ": residual " + m.format(r));
    }
  }
  return cert;
}

ComoduleStructure yau_twist_comodule(const ComoduleStructure& m, const LinMap& alpha_c,
                                     const Operator& alpha_m, unsigned n, unsigned k) {
  if (m.prov_ != Provenance::Untwisted)
    throw DomainError("yau_twist_comodule expects an untwisted comodule");
  if (k >= 31) throw DomainError("derivation index too large");
  HomCoalgebra twisted = yau_twist(m.c_, alpha_c);
  CompatCertificate cert = comodule_compat_check(m, alpha_c, alpha_m);
  if (!cert.granted) throw CompatibilityFailed("ρ∘α_M ≠ (α_C⊗α_M)∘ρ at " + cert.witnesses.front());
  ComoduleStructure out = m;
  out.c_ = derived(twisted, k);
  out.base_ = HomModule(m.labels(), alpha_m);
  unsigned p = 1u << k;
  out.u_ = p;
  out.v_ = n;
  out.w_ = p;
  out.prov_ = Provenance::YauTwisted;
  return out;
}

}  // namespace homcheck
