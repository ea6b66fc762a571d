#include "homcheck/presets/algebras.hpp"

#include "homcheck/errors.hpp"

namespace homcheck::presets {

namespace {

Word w(std::initializer_list<std::size_t> ids) {
  Word r;
  for (auto i : ids) r += letter_word(i);
  return r;
}

NcPoly term(std::initializer_list<std::size_t> ids, const Scalar& c = Scalar(1)) {
  return word_poly(w(ids), c);
}

TensorPoly<2> tens(const Word& a, const Word& b, const Scalar& c = Scalar(1)) {
  return TensorPoly<2>::of({a, b}, c);
}

}  // namespace

// ---------------------------------------------------------------------------

PresentationPtr quantum_space_presentation(unsigned n, bool fermionic, const Scalar& q) {
  if (n == 0) throw DomainError("quantum space needs n >= 1");
  std::vector<std::string> names;
  if (n == 2) {
    names = {"x", "y"};
  } else {
    for (unsigned i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  }
  std::vector<RewriteRule> rules;
  for (std::size_t i = 0; i < n; ++i) {
    if (fermionic) rules.push_back({w({i, i}), {}});
    for (std::size_t j = i + 1; j < n; ++j)
      rules.push_back({w({j, i}), term({i, j}, fermionic ? -q : q)});
  }
  std::string name = std::string(fermionic ? "fermionic-space-" : "quantum-space-") + std::to_string(n);
  return std::make_shared<Presentation>(name, Alphabet(names), std::move(rules));
}

LinMap quantum_space_twist(const PresentationPtr& pres, const std::vector<long long>& f,
                           const std::map<long long, Scalar>& lambdas) {
  long long n = static_cast<long long>(pres->alphabet().size());
  if (static_cast<long long>(f.size()) != n)
    throw DomainError("index map must list f(1).." + std::to_string(n));
  for (std::size_t i = 1; i < f.size(); ++i)
    if (!(f[i - 1] < f[i]))
      throw NotOrderPreserving("f(" + std::to_string(i) + ") = " + std::to_string(f[i - 1]) +
                               " is not below f(" + std::to_string(i + 1) + ") = " +
                               std::to_string(f[i]));
  std::vector<NcPoly> images;
  for (long long i = 0; i < n; ++i) {
    long long m = f[i];
    if (m < 1 || m > n) {
      images.emplace_back();
      continue;
    }
    auto it = lambdas.find(m);
    Scalar l = it == lambdas.end() ? Scalar(1) : it->second;
    images.push_back(term({static_cast<std::size_t>(m - 1)}, l));
  }
  return LinMap::multiplicative(pres, std::move(images));
}

HomAlgebra quantum_space(unsigned n, const std::vector<long long>& f,
                         const std::map<long long, Scalar>& lambdas, const Scalar& q) {
  auto pres = quantum_space_presentation(n, false, q);
  return yau_twist(HomAlgebra(pres), quantum_space_twist(pres, f, lambdas));
}

HomAlgebra fermionic_space(unsigned n, const std::vector<long long>& f,
                           const std::map<long long, Scalar>& lambdas, const Scalar& q) {
  auto pres = quantum_space_presentation(n, true, q);
  return yau_twist(HomAlgebra(pres), quantum_space_twist(pres, f, lambdas));
}

// ---------------------------------------------------------------------------

namespace sl2 {
constexpr std::size_t F = 0, K = 1, Ki = 2, E = 3;
}

PresentationPtr uq_sl2_presentation(const Scalar& q) {
  using namespace sl2;
  Scalar qq = q * q;
  Alphabet a({"F", "K", "Ki", "E"});
  a.pair_inverse(K, Ki);
  NcPoly ef = term({F, E});
  ef.add(term({K}, (q - q.inverse()).inverse()));
  ef.add(term({Ki}, -(q - q.inverse()).inverse()));
  std::vector<RewriteRule> rules{
      {w({K, F}), term({F, K}, qq.inverse())},   // KF = q^-2 FK
      {w({Ki, F}), term({F, Ki}, qq)},           // Ki F = q^2 F Ki
      {w({E, F}), ef},                           // EF = FE + (K - Ki)/(q - q^-1)
      {w({E, K}), term({K, E}, qq.inverse())},   // KE = q^2 EK
      {w({E, Ki}), term({Ki, E}, qq)},
      {w({K, Ki}), unit_poly()},
      {w({Ki, K}), unit_poly()},
  };
  return std::make_shared<Presentation>("uq-sl2", std::move(a), std::move(rules));
}

HomBialgebra uq_sl2_bialgebra(const Scalar& q) {
  using namespace sl2;
  auto pres = uq_sl2_presentation(q);
  std::vector<TensorPoly<2>> delta(4);
  delta[E] = tens("", w({E})) + tens(w({E}), w({K}));
  delta[F] = tens(w({Ki}), w({F})) + tens(w({F}), "");
  delta[K] = tens(w({K}), w({K}));
  delta[Ki] = tens(w({Ki}), w({Ki}));
  return HomBialgebra(pres, std::move(delta), "uq-sl2");
}

LinMap uq_sl2_twist(const PresentationPtr& pres, const Scalar& lambda) {
  using namespace sl2;
  if (lambda.is_zero()) throw DomainError("twist parameter must be invertible");
  std::vector<NcPoly> images(4);
  images[E] = term({E}, lambda);
  images[F] = term({F}, lambda.inverse());
  images[K] = term({K});
  images[Ki] = term({Ki});
  return LinMap::multiplicative(pres, std::move(images));
}

HomBialgebra uq_sl2(const Scalar& lambda, const Scalar& q) {
  HomBialgebra h = uq_sl2_bialgebra(q);
  return yau_twist(h, uq_sl2_twist(h.presentation_ptr(), lambda));
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> cartan_sl(unsigned n) {
  if (n < 2) throw DomainError("sl_n needs n >= 2");
  std::size_t r = n - 1;
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      a[i][j] = i == j ? 2 : (i + 1 == j || j + 1 == i) ? -1 : 0;
  return a;
}

// Generator layout for sl_n (r = n-1): E_i = i, F_i = r+i, K_i = 2r+i, Ki_i = 3r+i.
PresentationPtr uq_sln_presentation(unsigned n, const Scalar& q) {
  auto a = cartan_sl(n);
  std::size_t r = n - 1;
  std::vector<std::string> names;
  for (const char* base : {"E", "F", "K", "Ki"})
    for (std::size_t i = 1; i <= r; ++i) names.push_back(base + std::to_string(i));
  Alphabet alpha(names);
  auto E = [](std::size_t i) { return i; };
  auto F = [r](std::size_t i) { return r + i; };
  auto K = [r](std::size_t i) { return 2 * r + i; };
  auto Ki = [r](std::size_t i) { return 3 * r + i; };
  for (std::size_t i = 0; i < r; ++i) alpha.pair_inverse(K(i), Ki(i));

  Scalar two = qint(2, q);
  std::vector<Relation> rels;
  auto rel = [&](NcPoly lhs, NcPoly rhs) { rels.push_back({std::move(lhs), std::move(rhs)}); };
  for (std::size_t i = 0; i < r; ++i) {
    rel(term({K(i), Ki(i)}), unit_poly());
    rel(term({Ki(i), K(i)}), unit_poly());
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) rel(term({K(i), K(j)}), term({K(j), K(i)}));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Scalar qa = q.pow(a[i][j]);
      rel(term({K(i), E(j)}), term({E(j), K(i)}, qa));
      rel(term({K(i), F(j)}), term({F(j), K(i)}, qa.inverse()));
      NcPoly rhs;
      if (i == j) {
        Scalar c = (q - q.inverse()).inverse();
        rhs = term({K(i)}, c) + term({Ki(i)}, -c);
      }
      rel(term({E(i), F(j)}) - term({F(j), E(i)}), rhs);
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (a[i][j] == 0 && i < j) {
        rel(term({E(i), E(j)}), term({E(j), E(i)}));
        rel(term({F(i), F(j)}), term({F(j), F(i)}));
      } else if (a[i][j] == -1) {
        rel(term({E(i), E(i), E(j)}) - term({E(i), E(j), E(i)}, two) + term({E(j), E(i), E(i)}), {});
        rel(term({F(i), F(i), F(j)}) - term({F(i), F(j), F(i)}, two) + term({F(j), F(i), F(i)}), {});
      }
    }
  return Presentation::relations_only("uq-sl" + std::to_string(n), std::move(alpha), std::move(rels));
}

std::vector<TensorPoly<2>> uq_sln_coproducts(const PresentationPtr& pres) {
  std::size_t r = pres->alphabet().size() / 4;
  std::vector<TensorPoly<2>> d(4 * r);
  for (std::size_t i = 0; i < r; ++i) {
    Word e = letter_word(i), f = letter_word(r + i), k = letter_word(2 * r + i),
         ki = letter_word(3 * r + i);
    d[i] = tens("", e) + tens(e, k);
    d[r + i] = tens(ki, f) + tens(f, "");
    d[2 * r + i] = tens(k, k);
    d[3 * r + i] = tens(ki, ki);
  }
  return d;
}

LinMap uq_sln_twist(const PresentationPtr& pres, const std::vector<Scalar>& lambdas) {
  std::size_t r = pres->alphabet().size() / 4;
  if (lambdas.size() != r) throw DomainError("expected " + std::to_string(r) + " twist parameters");
  std::vector<NcPoly> images;
  for (std::size_t g = 0; g < 4 * r; ++g) {
    std::size_t i = g % r;
    Scalar c = g < r ? lambdas[i] : g < 2 * r ? lambdas[i].inverse() : Scalar(1);
    images.push_back(word_poly(letter_word(g), c));
  }
  return LinMap::multiplicative(pres, std::move(images));
}

HomBialgebra uq_sln(unsigned n, const std::vector<Scalar>& lambdas) {
  auto pres = uq_sln_presentation(n);
  HomBialgebra h(pres, uq_sln_coproducts(pres), pres->name());
  return yau_twist(h, uq_sln_twist(pres, lambdas));
}

}  // namespace homcheck::presets
