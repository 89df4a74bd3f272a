#pragma once

#include <string>
#include <vector>

#include "scflab/forms.hpp"
#include "scflab/lie_algebra.hpp"

namespace scf {

/// Column j is the image of e_j.
using Endomorphism = Matrix;

/// Left-invariant Riemannian metric g_ij = g(e_i, e_j).
class Metric {
 public:
  /// Requires exact symmetry; throws DegenerateMetric unless positive definite.
  explicit Metric(Matrix components);

  int dim() const { return static_cast<int>(g_.rows()); }
  const Matrix& matrix() const { return g_; }
  double min_eigenvalue() const { return min_eig_; }

  /// Columns form a g-orthonormal basis.
  Matrix orthonormal_frame() const;
  /// Solves g x = rhs.
  Matrix solve(const Matrix& rhs) const;

 private:
  Matrix g_;
  Eigen::LLT<Matrix> llt_;
  double min_eig_;
};

/// Smallest eigenvalue of the symmetric part of `m`.
double min_symmetric_eigenvalue(const Matrix& m);

/// Almost Kahler data (omega, J) on a Lie algebra; g(X,Y) = omega(X, JY).
struct AlmostKahlerStructure {
  LieAlgebra algebra;
  TwoForm omega;
  Endomorphism J;
};

/// g_ij = sum_k omega_ik J_kj, symmetrized. Throws DegenerateMetric
/// ("incompatible pair") when the result is not positive definite.
Metric metric_of(const TwoForm& omega, const Endomorphism& J);

/// Max-norm of g - g^T before symmetrization.
double metric_asymmetry(const TwoForm& omega, const Endomorphism& J);

struct StructureReport {
  double j_squared = 0;      // max |J^2 + I|
  double compatibility = 0;  // max |omega(J.,J.) - omega|
  double closedness = 0;     // max |d omega|
  double min_eig_g = 0;
  double metric_asymmetry = 0;
  double tol = 0;

  bool j_squared_ok() const { return j_squared <= tol; }
  bool compatibility_ok() const { return compatibility <= tol; }
  bool closedness_ok() const { return closedness <= tol; }
  bool metric_ok() const { return min_eig_g > 0; }
  bool passed() const { return j_squared_ok() && compatibility_ok() && closedness_ok() && metric_ok(); }
  /// Names of the failed conditions, empty when passed.
  std::vector<std::string> failures() const;
};

StructureReport check_structure(const AlmostKahlerStructure& S, double tol = 1e-10);

/// Throws InputError naming the failed conditions.
AlmostKahlerStructure make_structure(LieAlgebra algebra, TwoForm omega, Endomorphism J, double tol = 1e-10);

/// B^anti(X,Y) = (B(X,Y) - B(JX,JY)) / 2.
TwoForm anti_invariant_part(const TwoForm& B, const Endomorphism& J);
TwoForm invariant_part(const TwoForm& B, const Endomorphism& J);
/// Same projection on a general bilinear form (used for Ric).
Matrix anti_invariant_part(const Matrix& B, const Endomorphism& J);

/// The endomorphism E with g(EX, Y) = B(X, Y), i.e. E = g^-1 B^T.
Endomorphism raise(const Metric& g, const Matrix& B);
Endomorphism raise(const Metric& g, const TwoForm& B);
/// Inverse of raise: B(X,Y) = g(EX, Y).
Matrix lower(const Metric& g, const Endomorphism& E);

/// Rc J - J Rc.
Endomorphism commutator_anti_part(const Endomorphism& Rc, const Endomorphism& J);

}  // namespace scf
