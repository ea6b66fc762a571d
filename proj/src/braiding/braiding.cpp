#include "homcheck/braiding/braiding.hpp"

#include <algorithm>
#include <set>

#include "homcheck/errors.hpp"

namespace homcheck {

namespace {

std::string desc(const Presentation& p, std::initializer_list<const Word*> ws) {
  std::string s = "(";
  bool first = true;
  for (const Word* w : ws) {
    if (!first) s += ", ";
    first = false;
    s += p.alphabet().format(*w);
  }
  return s + ")";
}

const LinMap& current_alpha(const HomBialgebra& h) {
  return h.algebra().powers()->power(h.exponents().m);
}

std::size_t rank(std::vector<std::vector<Scalar>> m) {
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    Scalar inv = m[r][c].inverse();
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

Report check_weak_unit(const HomAlgebra& a, const NcPoly& c, std::size_t degree) {
  Report r;
  r.subject = "weak unit " + a.presentation().format(c) + " of " + a.name();
  const auto& p = a.presentation();
  auto W = p.normal_words(degree);
  r.axioms.push_back(run_instances(
      "weak-unit", W.size(),
      [&](std::size_t i) {
        NcPoly x = word_poly(W[i]), ax = a.alpha(x);
        NcPoly left = a.mul(c, x) - ax, right = a.mul(x, c) - ax;
        if (left.is_zero() && right.is_zero()) return Outcome::pass();
        return Outcome::fail("cx - α(x) = " + p.format(left) + "; xc - α(x) = " + p.format(right));
      },
      [&](std::size_t i) { return desc(p, {&W[i]}); }));
  return r;
}

LiftedR lift_R(const TensorPoly<2>& R, const NcPoly& c) {
  auto cc = tensor_of<1>({c});
  LiftedR l;
  l.r12 = tensor_join<2, 1>(R, cc);
  l.r23 = tensor_join<1, 2>(cc, R);
  l.r13 = permute<3>(l.r23, {1, 0, 2});
  return l;
}

bool bijectivity_certificate(const LinMap& m) {
  if (m.mode() == LinMap::Mode::Multiplicative) {
    std::set<std::size_t> hit;
    for (const auto& img : m.images()) {
      if (img.size() != 1) return false;
      const auto& [w, c] = *img.begin();
      if (w.size() != 1 || c.is_zero()) return false;
      hit.insert(letter_id(w[0]));
    }
    return hit.size() == m.images().size();
  }
  const auto& table = m.table();
  if (table.empty()) return false;
  std::map<Word, std::size_t, DegLex> index;
  for (const auto& [k, v] : table) index.emplace(k, index.size());
  std::vector<std::vector<Scalar>> mat;
  for (const auto& [k, img] : table) {
    std::vector<Scalar> row(index.size(), Scalar(0));
    for (const auto& [w, c] : img) {
      auto it = index.find(w);
      if (it == index.end()) return false;  // leaves the window
      row[it->second] = c;
    }
    mat.push_back(std::move(row));
  }
  return rank(std::move(mat)) == index.size();
}

// ---------------------------------------------------------------------------
// Quasi-triangular structures

QuasiTriangular::QuasiTriangular(HomBialgebra h, NcPoly c, TensorPoly<2> R, unsigned r_twist)
    : h_(std::move(h)), c_(std::move(c)), R_(tensor_nf<2>(R, h_.presentation())), e_(r_twist) {}

TensorPoly<2> QuasiTriangular::R() const {
  if (e_ == 0) return R_;
  const LinMap& a = h_.algebra().powers()->power(e_);
  return apply_tensor<2>({&a, &a}, R_);
}

QuasiTriangular derived_qt(const QuasiTriangular& Q, unsigned n, unsigned k) {
  const auto& h = Q.bialgebra();
  if (k > 0 && !bijectivity_certificate(current_alpha(h)))
    throw SurjectivityUnverified("twisting map of " + h.name() +
                                 " is not certified surjective; R cannot be twisted");
  return QuasiTriangular(derived(h, n), Q.weak_unit(), Q.R_base(),
                         Q.r_twist() + h.exponents().m * k);
}

TensorPoly<3> qt_left_residual(const QuasiTriangular& Q) {
  const auto& h = Q.bialgebra();
  TensorPoly<2> R = Q.R();
  TensorPoly<3> lhs;
  for (const auto& [k, v] : R)
    lhs.add(tensor_join<2, 1>(h.comul(word_poly(k[0])), tensor_of<1>({h.alpha(word_poly(k[1]))})), v);
  LiftedR l = lift_R(R, Q.weak_unit());
  return lhs - h.mul_tensor<3>(l.r13, l.r23);
}

TensorPoly<3> qt_right_residual(const QuasiTriangular& Q) {
  const auto& h = Q.bialgebra();
  TensorPoly<2> R = Q.R();
  TensorPoly<3> lhs;
  for (const auto& [k, v] : R)
    lhs.add(tensor_join<1, 2>(tensor_of<1>({h.alpha(word_poly(k[0]))}), h.comul(word_poly(k[1]))), v);
  LiftedR l = lift_R(R, Q.weak_unit());
  return lhs - h.mul_tensor<3>(l.r13, l.r12);
}

TensorPoly<2> qt_braiding_residual(const QuasiTriangular& Q, const NcPoly& x) {
  const auto& h = Q.bialgebra();
  TensorPoly<2> R = Q.R();
  TensorPoly<2> d = h.comul(x);
  return h.mul_tensor<2>(permute<2>(d, {1, 0}), R) - h.mul_tensor<2>(R, d);
}

Report check_qt(const QuasiTriangular& Q, std::size_t degree) {
  const auto& h = Q.bialgebra();
  const auto& p = h.presentation();
  Report r = check_weak_unit(h.algebra(), Q.weak_unit(), degree);
  r.subject = "quasi-triangular " + h.name() + " [s=" + std::to_string(h.exponents().s) +
              ", m=" + std::to_string(h.exponents().m) + ", R twist " +
              std::to_string(Q.r_twist()) + "]";
  auto single = [&](const char* id, TensorPoly<3> res) {
    AxiomResult a;
    a.id = id;
    a.instances = 1;
    a.verdicts.push_back(res.is_zero() ? Outcome::Pass : Outcome::Fail);
    if (!res.is_zero()) {
      a.failures = 1;
      a.witness = "R = " + p.format<2>(Q.R());
      a.residual = p.format<3>(res);
    }
    r.axioms.push_back(std::move(a));
  };
  single("qt-delta-left", qt_left_residual(Q));
  single("qt-delta-right", qt_right_residual(Q));
  auto W = p.normal_words(degree);
  r.axioms.push_back(run_instances(
      "qt-braiding", W.size(),
      [&](std::size_t i) {
        TensorPoly<2> res = qt_braiding_residual(Q, word_poly(W[i]));
        return res.is_zero() ? Outcome::pass() : Outcome::fail(p.format<2>(res));
      },
      [&](std::size_t i) { return desc(p, {&W[i]}); }));
  return r;
}

// ---------------------------------------------------------------------------
// Cobraided structures

CobraidForm::CobraidForm(std::vector<Word> window, Table table, unsigned twist)
    : window_(std::move(window)), table_(std::move(table)), e_(twist) {
  std::sort(window_.begin(), window_.end(), DegLex());
  for (const auto& [k, v] : table_)
    if (!std::binary_search(window_.begin(), window_.end(), k.first, DegLex()) ||
        !std::binary_search(window_.begin(), window_.end(), k.second, DegLex()))
      throw OutOfWindow("form entry outside its basis window");
}

Scalar CobraidForm::base_value(const Word& x, const Word& y) const {
  if (!std::binary_search(window_.begin(), window_.end(), x, DegLex()) ||
      !std::binary_search(window_.begin(), window_.end(), y, DegLex()))
    throw OutOfWindow("form evaluated outside its basis window");
  auto it = table_.find({x, y});
  return it == table_.end() ? Scalar(0) : it->second;
}

Scalar CobraidForm::value(const HomBialgebra& h, const NcPoly& x, const NcPoly& y) const {
  NcPoly ax = h.algebra().alpha_base_pow(x, e_), ay = h.algebra().alpha_base_pow(y, e_);
  Scalar s(0);
  for (const auto& [u, cu] : ax)
    for (const auto& [v, cv] : ay) s = s + cu * cv * base_value(u, v);
  return s;
}

Scalar CobraidForm::value(const HomBialgebra& h, const TensorPoly<2>& t) const {
  Scalar s(0);
  for (const auto& [k, c] : t) s = s + c * value(h, word_poly(k[0]), word_poly(k[1]));
  return s;
}

CobraidForm derived_cobraided(const HomBialgebra& h, const CobraidForm& R, unsigned n, unsigned k) {
  (void)n;  // the form only sees the cotwist; the bialgebra part is derived(h, n)
  if (k > 0 && !bijectivity_certificate(current_alpha(h)))
    throw InjectivityUnverified("twisting map of " + h.name() +
                                " is not certified injective; the form cannot be twisted");
  return CobraidForm(R.window(), R.table(), R.twist() + h.exponents().m * k);
}

Report check_cobraided(const HomBialgebra& h, const CobraidForm& R, std::size_t degree) {
  const auto& p = h.presentation();
  Report r;
  r.subject = "cobraided " + h.name() + " [s=" + std::to_string(h.exponents().s) +
              ", m=" + std::to_string(h.exponents().m) + ", form twist " +
              std::to_string(R.twist()) + "]";
  auto W = p.normal_words(degree);
  std::size_t n = W.size();
  auto guarded = [](auto&& f) {
    try {
      return f();
    } catch (const OutOfWindow&) {
      return Outcome::skip();
    }
  };
  auto scalar_outcome = [](const Scalar& s) {
    return s.is_zero() ? Outcome::pass() : Outcome::fail(s.to_string());
  };

  // R(xy ⊗ α(z)) = Σ R(α(x) ⊗ z1) R(α(y) ⊗ z2)
  r.axioms.push_back(run_instances(
      "cobraid-mul-left", n * n * n,
      [&](std::size_t i) {
        return guarded([&] {
          NcPoly x = word_poly(W[i / (n * n)]), y = word_poly(W[(i / n) % n]), z = word_poly(W[i % n]);
          Scalar lhs = R.value(h, h.mul(x, y), h.alpha(z));
          NcPoly ax = h.alpha(x), ay = h.alpha(y);
          Scalar rhs(0);
          for (const auto& [k, c] : h.comul(z))
            rhs = rhs + c * R.value(h, ax, word_poly(k[0])) * R.value(h, ay, word_poly(k[1]));
          return scalar_outcome(lhs - rhs);
        });
      },
      [&](std::size_t i) { return desc(p, {&W[i / (n * n)], &W[(i / n) % n], &W[i % n]}); }));

  // R(α(x) ⊗ yz) = Σ R(x1 ⊗ α(z)) R(x2 ⊗ α(y))
  r.axioms.push_back(run_instances(
      "cobraid-mul-right", n * n * n,
      [&](std::size_t i) {
        return guarded([&] {
          NcPoly x = word_poly(W[i / (n * n)]), y = word_poly(W[(i / n) % n]), z = word_poly(W[i % n]);
          Scalar lhs = R.value(h, h.alpha(x), h.mul(y, z));
          NcPoly ay = h.alpha(y), az = h.alpha(z);
          Scalar rhs(0);
          for (const auto& [k, c] : h.comul(x))
            rhs = rhs + c * R.value(h, word_poly(k[0]), az) * R.value(h, word_poly(k[1]), ay);
          return scalar_outcome(lhs - rhs);
        });
      },
      [&](std::size_t i) { return desc(p, {&W[i / (n * n)], &W[(i / n) % n], &W[i % n]}); }));

  // Σ y1x1 R(x2 ⊗ y2) = Σ R(x1 ⊗ y1) x2y2
  r.axioms.push_back(run_instances(
      "cobraid-commute", n * n,
      [&](std::size_t i) {
        return guarded([&] {
          TensorPoly<2> dx = h.comul(word_poly(W[i / n])), dy = h.comul(word_poly(W[i % n]));
          NcPoly res;
          for (const auto& [kx, cx] : dx)
            for (const auto& [ky, cy] : dy) {
              NcPoly x1 = word_poly(kx[0]), x2 = word_poly(kx[1]);
              NcPoly y1 = word_poly(ky[0]), y2 = word_poly(ky[1]);
              Scalar c = cx * cy;
              res = res + h.mul(y1, x1).scaled(c * R.value(h, x2, y2)) -
                    h.mul(x2, y2).scaled(c * R.value(h, x1, y1));
            }
          return res.is_zero() ? Outcome::pass() : Outcome::fail(p.format(res));
        });
      },
      [&](std::size_t i) { return desc(p, {&W[i / n], &W[i % n]}); }));
  return r;
}

}  // namespace homcheck
