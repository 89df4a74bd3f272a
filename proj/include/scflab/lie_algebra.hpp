#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace scf {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// One nonzero bracket [e_i, e_j] += value * e_k, 1-based indices.
struct BracketEntry {
  int i;
  int j;
  int k;
  double value;
};

/// Real Lie algebra given by structure constants in a fixed basis e_1..e_n.
///
/// `constant(k, i, j)` (0-based) is the coefficient of e_k in [e_i, e_j].
/// Antisymmetry in (i, j) is checked exactly at construction and inputs that
/// break it are rejected. The Jacobi identity is not enforced here; see
/// `jacobi_defect` and `require_jacobi`.
class LieAlgebra {
 public:
  /// `constants` is laid out as c[(k * n + i) * n + j].
  LieAlgebra(int dim, std::vector<double> constants);

  /// Builds from brackets listed for i < j only; [e_j, e_i] is implied.
  static LieAlgebra from_brackets(int dim, const std::vector<BracketEntry>& brackets);
  static LieAlgebra abelian(int dim);

  int dim() const { return dim_; }
  double constant(int k, int i, int j) const { return c_[(k * dim_ + i) * dim_ + j]; }
  const std::vector<double>& constants() const { return c_; }

  bool is_abelian() const;

 private:
  int dim_;
  std::vector<double> c_;
};

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y);

/// Matrix of ad_z, so that ad(L, z) * x == bracket(L, z, x).
Matrix ad(const LieAlgebra& L, const Vector& z);

/// Max-norm of the Jacobiator over all basis triples.
double jacobi_defect(const LieAlgebra& L);

/// Throws JacobiError when jacobi_defect exceeds `tol`.
void require_jacobi(const LieAlgebra& L, double tol = 1e-12);

/// Smallest s with g^(s+1) = 0 in the lower central series, or nullopt when
/// the series stabilizes at a nonzero ideal.
std::optional<int> nilpotency_step(const LieAlgebra& L);

/// Expresses the algebra in the basis f_a = sum_i basis(i, a) e_i.
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& basis);

}  // namespace scf
