#pragma once

#include <vector>

#include "scflab/ak_structure.hpp"

namespace scf {

/// Connection 1-form in the left-invariant frame:
/// A_{e_j} e_i = sum_k A(k, i, j) e_k.
class ConnectionForm {
 public:
  ConnectionForm(int dim, std::vector<double> components);

  int dim() const { return dim_; }
  double operator()(int k, int i, int j) const { return a_[(k * dim_ + i) * dim_ + j]; }
  /// Endomorphism A_Z for Z = sum_j z_j e_j.
  Matrix along(const Vector& z) const;
  Matrix along_basis(int j) const;

 private:
  int dim_;
  std::vector<double> a_;
};

/// R(e_i, e_j) e_l = sum_k R(k, l, i, j) e_k.
class CurvatureTensor {
 public:
  CurvatureTensor(int dim, std::vector<double> components);

  int dim() const { return dim_; }
  double operator()(int k, int l, int i, int j) const {
    return r_[((k * dim_ + l) * dim_ + i) * dim_ + j];
  }
  Matrix at(int i, int j) const;
  double max_abs() const;

 private:
  int dim_;
  std::vector<double> r_;
};

/// N(e_i, e_j) = sum_k N(k, i, j) e_k.
class NijenhuisTensor {
 public:
  NijenhuisTensor(int dim, std::vector<double> components);

  int dim() const { return dim_; }
  double operator()(int k, int i, int j) const { return n_[(k * dim_ + i) * dim_ + j]; }
  Vector at(int i, int j) const;
  Vector apply(const Vector& x, const Vector& y) const;
  double max_abs() const;

 private:
  int dim_;
  std::vector<double> n_;
};

/// Symmetrized Ricci form plus the asymmetry that was removed.
struct Ricci {
  Matrix form;
  double asymmetry = 0;
};

/// Koszul formula 2g(A_Z X, Y) = g([Z,X],Y) - g([Z,Y],X) - g([X,Y],Z).
ConnectionForm levi_civita(const LieAlgebra& L, const Metric& g);

/// R(X,Y) = [A_X, A_Y] - A_[X,Y].
CurvatureTensor riemann(const LieAlgebra& L, const ConnectionForm& A);

/// Ric(X,Y) = tr(Z -> R(Z,X)Y).
Ricci ricci(const CurvatureTensor& R);

/// Rc = g^-1 Ric.
Endomorphism ricci_endomorphism(const Metric& g, const Matrix& ric);

/// C_Z = (A_Z - J A_Z J) / 2.
ConnectionForm chern_connection(const ConnectionForm& A, const Endomorphism& J);

/// P(e_i, e_j) = -tr(A_[e_i,e_j] J).
TwoForm chern_ricci_trace(const LieAlgebra& L, const ConnectionForm& A, const Endomorphism& J);

/// Metric-free form: P(X,Y) = -tr(ad_W J + J ad_W)/2 - tr ad_{JW}, W = [X,Y].
TwoForm chern_ricci_adjoint(const LieAlgebra& L, const Endomorphism& J);

/// N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y].
NijenhuisTensor nijenhuis(const LieAlgebra& L, const Endomorphism& J);

/// Sum over ordered pairs of a g-orthonormal frame of |N(f_a, f_b)|^2.
double norm_nijenhuis(const Metric& g, const NijenhuisTensor& N);

/// Sum of R_abcd^2 over a g-orthonormal frame, R_abcd = g(R(f_c,f_d) f_b, f_a).
double norm_riemann(const Metric& g, const CurvatureTensor& R);

/// Constant relating norm_riemann to the reported ||R||^2. The full contraction
/// already reproduces the Kodaira-Thurston value 11/4, so it is 1.
inline constexpr double kRiemannNormCalibration = 1.0;

/// Everything derived from one structure in a single pass.
struct CurvatureReport {
  Metric g;
  ConnectionForm A;
  CurvatureTensor R;
  Ricci ric;
  Endomorphism Rc;
  TwoForm P;
};

CurvatureReport curvature_of(const LieAlgebra& L, const TwoForm& omega, const Endomorphism& J);

}  // namespace scf
