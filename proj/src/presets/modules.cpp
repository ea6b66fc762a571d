#include "homcheck/presets/modules.hpp"

#include "homcheck/errors.hpp"
#include "homcheck/presets/fixtures.hpp"

namespace homcheck::presets {

namespace {

// U_q(sl2) generator ids
constexpr std::size_t kF = 0, kK = 1, kKi = 2, kE = 3;

std::vector<std::string> labels(long long first, long long count) {
  std::vector<std::string> out;
  for (long long i = 0; i < count; ++i) out.push_back("v" + std::to_string(first + i));
  return out;
}

Operator zero_operator(std::size_t dim) { return Operator(dim); }

// x^m y^n as a word of the plane (x = 0, y = 1)
Word monomial(long long m, long long n) {
  return Word(static_cast<std::size_t>(m), '\0') + Word(static_cast<std::size_t>(n), '\1');
}

std::pair<long long, long long> exponents_of(const Word& w) {
  long long m = 0, n = 0;
  for (char c : w) (letter_id(c) == 0 ? m : n)++;
  return {m, n};
}

}  // namespace

ModuleStructure module_V(int eps, unsigned n, const Scalar& q) {
  if (eps != 1 && eps != -1) throw DomainError("ε must be +1 or -1");
  Scalar e(eps);
  std::size_t dim = n + 1;
  std::vector<Operator> ops(4, zero_operator(dim));
  for (long long i = 0; i <= n; ++i) {
    if (i < n) ops[kF][i] = basis_vec(i + 1, qint(i + 1, q));
    Scalar k = e * q.pow(static_cast<long long>(n) - 2 * i);
    ops[kK][i] = basis_vec(i, k);
    ops[kKi][i] = basis_vec(i, k.inverse());
    if (i > 0) ops[kE][i] = basis_vec(i - 1, e * qint(static_cast<long long>(n) - i + 1, q));
  }
  return ModuleStructure(uq_sl2_presentation(q), labels(0, dim), std::move(ops),
                         "V(" + std::string(eps > 0 ? "+1" : "-1") + ", " + std::to_string(n) + ")");
}

ModuleStructure verma(const Scalar& eta, unsigned window, const Scalar& q) {
  if (window < 2) throw DomainError("the Verma window needs N >= 2");
  if (eta.is_zero()) throw DomainError("η must be invertible");
  std::size_t dim = window + 1;
  std::vector<Operator> ops(4, zero_operator(dim));
  for (long long i = 0; i <= window; ++i) {
    ops[kF][i] = basis_vec(i + 1, qint(i + 1, q));  // i = N leaves the window
    Scalar k = eta * q.pow(-2 * i);
    ops[kK][i] = basis_vec(i, k);
    ops[kKi][i] = basis_vec(i, k.inverse());
    if (i > 0) {
      long long j = i - 1;  // E v_{j+1} = (q^{-j} η - q^j η^{-1}) / (q - q^{-1}) v_j
      Scalar c = (q.pow(-j) * eta - q.pow(j) * eta.inverse()) / (q - q.inverse());
      ops[kE][i] = basis_vec(j, c);
    }
  }
  return ModuleStructure(uq_sl2_presentation(q), labels(0, dim), std::move(ops),
                         "Verma(" + eta.to_string() + ") v0..v" + std::to_string(window));
}

Operator alpha_xi(std::size_t dim, const Scalar& xi, const Scalar& lambda) {
  Operator a(dim);
  for (std::size_t i = 0; i < dim; ++i) a[i] = basis_vec(i, xi * lambda.pow(-static_cast<long long>(i)));
  return a;
}

ModuleStructure module_Vn(unsigned n, const Scalar& q) {
  if (n < 2) throw DomainError("V_n needs n >= 2");
  auto pres = uq_sln_presentation(n, q);
  std::size_t r = n - 1;
  std::vector<Operator> ops(4 * r, zero_operator(n));
  // index j - 1 holds v_j
  for (std::size_t i = 0; i < r; ++i) {
    ops[i][i + 1] = basis_vec(i);          // E_i v_{i+1} = v_i
    ops[r + i][i] = basis_vec(i + 1);      // F_i v_i = v_{i+1}
    for (std::size_t j = 0; j < n; ++j) {
      Scalar p = j == i ? q : j == i + 1 ? q.inverse() : Scalar(1);
      ops[2 * r + i][j] = basis_vec(j, p);
      ops[3 * r + i][j] = basis_vec(j, p.inverse());
    }
  }
  return ModuleStructure(pres, labels(1, n), std::move(ops), "V_" + std::to_string(n));
}

Operator alpha_xi_sln(const Scalar& xi, const std::vector<Scalar>& lambdas) {
  std::size_t n = lambdas.size() + 1;
  Operator a(n);
  Scalar prod(1);  // λ1⋯λ_{i-1}
  for (std::size_t j = 0; j < n; ++j) {
    a[j] = basis_vec(j, xi * prod.inverse());
    if (j < lambdas.size()) prod *= lambdas[j];
  }
  return a;
}

// ---------------------------------------------------------------------------

ActionTransducer qplane_action_standard(const Scalar& q) {
  ActionTransducer t;
  t.name = "standard U_q(sl2)-action on the quantum plane";
  t.acting = uq_sl2_presentation(q);
  t.carrier = quantum_space_presentation(2, false, q);
  t.rule = [q](std::size_t g, const Word& w) -> NcPoly {
    auto [m, n] = exponents_of(w);
    switch (g) {
      case kF: return m ? word_poly(monomial(m - 1, n + 1), qint(m, q)) : NcPoly();
      case kK: return word_poly(w, q.pow(m - n));
      case kKi: return word_poly(w, q.pow(n - m));
      case kE: return n ? word_poly(monomial(m + 1, n - 1), qint(n, q)) : NcPoly();
    }
    throw DomainError("unknown generator");
  };
  return t;
}

ActionTransducer qplane_action_nonstandard(const Scalar& q) {
  bool rational = q.numerator().is_constant() && q.denominator().is_constant();
  if (rational) validate_nonstandard_q(q.eval_at(std::map<std::size_t, Rational>{}));
  ActionTransducer t;
  t.name = "non-standard U_q(sl2)-action on the quantum plane";
  t.acting = uq_sl2_presentation(q);
  t.carrier = quantum_space_presentation(2, false, q);
  if (!rational) t.notes.push_back("the non-standard action is stated for 0 < q < 1; q is kept symbolic here");
  t.rule = [q](std::size_t g, const Word& w) -> NcPoly {
    auto [m, n] = exponents_of(w);
    switch (g) {
      case kF: {
        Scalar c = q.pow(-m) * (q.pow(2 * m) - q.pow(2 * n)) / (q - q.inverse());
        return word_poly(monomial(m, n + 1), c);
      }
      case kK: return word_poly(w, q.pow(m - 2 * n));
      case kKi: return word_poly(w, q.pow(2 * n - m));
      case kE: return n ? word_poly(monomial(m, n - 1), q.pow(1 - n) * qint(n, q)) : NcPoly();
    }
    throw DomainError("unknown generator");
  };
  return t;
}

void validate_nonstandard_q(const Rational& q) {
  if (!(q > 0 && q < 1))
    throw DomainError("the non-standard quantum-plane action needs 0 < q < 1");
}

LinMap qplane_twist(const PresentationPtr& plane, const Scalar& xi, const Scalar& lambda) {
  return quantum_space_twist(plane, {1, 2}, {{1, xi}, {2, xi * lambda.inverse()}});
}

namespace {

ModuleHomAlgebra untwisted(ActionTransducer t, const Scalar& q) {
  HomBialgebra h(t.acting, uq_sl2_bialgebra(q).coalgebra().delta_generators(), "U_q(sl2)");
  HomAlgebra a(t.carrier, "quantum plane");
  return ModuleHomAlgebra(std::move(h), std::move(a), std::move(t));
}

}  // namespace

ModuleHomAlgebra qplane_module_algebra(bool standard, const Scalar& q) {
  return untwisted(standard ? qplane_action_standard(q) : qplane_action_nonstandard(q), q);
}

ModuleHomAlgebra qplane_standard(const Scalar& lambda, const Scalar& xi, unsigned l, unsigned k,
                                 const Scalar& q) {
  auto s = qplane_module_algebra(true, q);
  return yau_twist_mha(s, uq_sl2_twist(s.bialgebra().presentation_ptr(), lambda),
                       qplane_twist(s.algebra().presentation_ptr(), xi, lambda), l, k);
}

ModuleHomAlgebra qplane_nonstandard(const Scalar& lambda, const Scalar& xi, unsigned l,
                                    unsigned k, const Scalar& q) {
  if (!xi.is_one())
    throw NonunitXiForbidden("the non-standard action twists only with ξ = 1, got ξ = " +
                             xi.to_string());
  auto s = qplane_module_algebra(false, q);
  return yau_twist_mha(s, uq_sl2_twist(s.bialgebra().presentation_ptr(), lambda),
                       qplane_twist(s.algebra().presentation_ptr(), xi, lambda), l, k);
}

// ---------------------------------------------------------------------------

ComoduleStructure z2_grouplike_comodule() {
  auto c = z2_bialgebra().coalgebra();
  Word g = letter_word(0);
  return ComoduleStructure(c, {"v0", "v1"}, {CoVec::of({g, 0}), CoVec::of({g, 1})},
                           "g-coaction");
}

ComoduleStructure z2_graded_comodule() {
  auto c = z2_bialgebra().coalgebra();
  Word g = letter_word(0);
  return ComoduleStructure(c, {"v0", "v1"}, {CoVec::of({Word(), 0}), CoVec::of({g, 1})},
                           "Z/2-graded");
}

LinMap z2_coalgebra_swap(const PresentationPtr& pres) {
  Word g = letter_word(0);
  return LinMap::tabular({{Word(), word_poly(g)}, {g, unit_poly()}}, pres);
}

}  // namespace homcheck::presets
