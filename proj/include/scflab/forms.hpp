#pragma once

#include <optional>
#include <vector>

#include "scflab/lie_algebra.hpp"

namespace scf {

/// Left-invariant 1-form, components theta_i = theta(e_i).
class OneForm {
 public:
  explicit OneForm(Vector components);
  static OneForm basis(int dim, int index);  // e^{index+1}

  int dim() const { return static_cast<int>(v_.size()); }
  const Vector& components() const { return v_; }
  double operator[](int i) const { return v_(i); }

 private:
  Vector v_;
};

/// Left-invariant 2-form, B_ij = B(e_i, e_j). Antisymmetry is exact.
class TwoForm {
 public:
  /// Rejects matrices that are not exactly antisymmetric.
  explicit TwoForm(Matrix components);
  static TwoForm zero(int dim);
  /// value * e^{i+1} ^ e^{j+1} (0-based indices).
  static TwoForm wedge(int dim, int i, int j, double value = 1.0);
  /// Keeps the strict upper triangle of `m` and mirrors it.
  static TwoForm from_upper(const Matrix& m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  double max_abs() const { return m_.cwiseAbs().maxCoeff(); }

  TwoForm operator+(const TwoForm& o) const { return TwoForm(m_ + o.m_); }
  TwoForm operator-(const TwoForm& o) const { return TwoForm(m_ - o.m_); }
  TwoForm operator*(double s) const { return TwoForm(m_ * s); }

 private:
  Matrix m_;
};

/// Totally antisymmetric trilinear form, full n^3 storage.
class ThreeForm {
 public:
  ThreeForm(int dim, std::vector<double> components);

  int dim() const { return dim_; }
  double operator()(int i, int j, int l) const { return c_[(i * dim_ + j) * dim_ + l]; }
  double max_abs() const;

 private:
  int dim_;
  std::vector<double> c_;
};

/// Chevalley-Eilenberg differential, d theta(X, Y) = -theta([X, Y]).
TwoForm ce_d1(const LieAlgebra& L, const OneForm& theta);

/// dB(X,Y,Z) = -B([X,Y],Z) + B([X,Z],Y) - B([Y,Z],X).
ThreeForm ce_d2(const LieAlgebra& L, const TwoForm& B);

/// Matrix of ce_d1 from R^n to the strict upper triangle (i<j, lexicographic).
Matrix ce_d1_matrix(const LieAlgebra& L);
/// Matrix of ce_d2 from the upper triangle to triples i<j<l (lexicographic).
Matrix ce_d2_matrix(const LieAlgebra& L);

/// Betti number of the CE complex in degree 0, 1 or 2 (rank tolerance 1e-9).
int ce_betti(const LieAlgebra& L, int degree);

/// Least-squares primitive theta with ce_d1(theta) = B, or nullopt when the
/// residual exceeds `tol`.
std::optional<OneForm> exact_primitive(const LieAlgebra& L, const TwoForm& B, double tol = 1e-9);

inline constexpr double kRankTolerance = 1e-9;

}  // namespace scf
