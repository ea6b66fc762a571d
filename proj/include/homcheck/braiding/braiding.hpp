#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homcheck/homstruct/homstruct.hpp"

namespace homcheck {

/// α(x) = cx = xc (current product) on all normal words of degree <= d.
Report check_weak_unit(const HomAlgebra& a, const NcPoly& c, std::size_t degree);

struct LiftedR {
  TensorPoly<3> r12, r13, r23;
};

/// R12 = R ⊗ c, R23 = c ⊗ R, R13 = (τ ⊗ Id)(R23).
LiftedR lift_R(const TensorPoly<2>& R, const NcPoly& c);

/// True when `m` is a bijection we can certify: a multiplicative map sending
/// the generators to a permutation of themselves with nonzero scalars, or a
/// tabular map that is square and of full rank on its window.
bool bijectivity_certificate(const LinMap& m);

/// Quasi-triangular Hom-bialgebra (H, c, R). The braiding element in use is
/// (α_base^e ⊗ α_base^e)(R_base) where e = r_twist().
class QuasiTriangular {
 public:
  QuasiTriangular(HomBialgebra h, NcPoly c, TensorPoly<2> R, unsigned r_twist = 0);

  const HomBialgebra& bialgebra() const { return h_; }
  const NcPoly& weak_unit() const { return c_; }
  const TensorPoly<2>& R_base() const { return R_; }
  unsigned r_twist() const { return e_; }
  TensorPoly<2> R() const;

 private:
  HomBialgebra h_;
  NcPoly c_;
  TensorPoly<2> R_;
  unsigned e_;
};

/// H^{n,k}: derived(H, n) with R replaced by (α^k ⊗ α^k)(R), α the current
/// twisting map of Q. k > 0 needs a bijectivity certificate for α
/// (SurjectivityUnverified otherwise).
QuasiTriangular derived_qt(const QuasiTriangular& Q, unsigned n, unsigned k);

/// Weak unit, the two R-axioms, and [Δ^op(x)]R = RΔ(x) for words of degree <= d.
Report check_qt(const QuasiTriangular& Q, std::size_t degree);

/// Single-instance residuals.
TensorPoly<3> qt_left_residual(const QuasiTriangular& Q);   // (Δ⊗α)(R) - R13 R23
TensorPoly<3> qt_right_residual(const QuasiTriangular& Q);  // (α⊗Δ)(R) - R13 R12
TensorPoly<2> qt_braiding_residual(const QuasiTriangular& Q, const NcPoly& x);

/// Bilinear form given on a finite window of basis words; pairs in the
/// window without an entry are zero, words outside it throw OutOfWindow.
/// The form in use is R_base ∘ (α_base^e ⊗ α_base^e), e = twist().
class CobraidForm {
 public:
  using Table = std::map<std::pair<Word, Word>, Scalar>;

  CobraidForm(std::vector<Word> window, Table table, unsigned twist = 0);

  const std::vector<Word>& window() const { return window_; }
  const Table& table() const { return table_; }
  unsigned twist() const { return e_; }

  /// R_base on basis words.
  Scalar base_value(const Word& x, const Word& y) const;
  /// Current form R(x ⊗ y), α taken from `h`.
  Scalar value(const HomBialgebra& h, const NcPoly& x, const NcPoly& y) const;
  Scalar value(const HomBialgebra& h, const TensorPoly<2>& t) const;

 private:
  std::vector<Word> window_;
  Table table_;
  unsigned e_;
};

/// Form of H^{n,k}: R ∘ (α^k ⊗ α^k) with α the current map of `h`; pair it
/// with derived(h, n). k > 0 needs a bijectivity certificate
/// (InjectivityUnverified otherwise).
CobraidForm derived_cobraided(const HomBialgebra& h, const CobraidForm& R, unsigned n, unsigned k);

/// The three cobraided axioms over normal words of degree <= d.
Report check_cobraided(const HomBialgebra& h, const CobraidForm& R, std::size_t degree);

}  // namespace homcheck
