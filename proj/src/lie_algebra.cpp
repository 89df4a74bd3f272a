#include "scflab/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "scflab/errors.hpp"

namespace scf {

LieAlgebra::LieAlgebra(int dim, std::vector<double> constants) : dim_(dim), c_(std::move(constants)) {
  if (dim <= 0) throw InputError("Lie algebra dimension must be positive");
  if (c_.size() != static_cast<std::size_t>(dim) * dim * dim)
    throw InputError("structure constant array has wrong size");
  for (int k = 0; k < dim; ++k)
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j)
        if (constant(k, i, j) != -constant(k, j, i)) {
          std::ostringstream os;
          os << "structure constants not antisymmetric at c[" << k + 1 << "][" << i + 1 << "][" << j + 1
             << "]";
          throw InputError(os.str());
        }
}

LieAlgebra LieAlgebra::from_brackets(int dim, const std::vector<BracketEntry>& brackets) {
  if (dim <= 0) throw InputError("Lie algebra dimension must be positive");
  std::vector<double> c(static_cast<std::size_t>(dim) * dim * dim, 0.0);
  for (const auto& b : brackets) {
    if (b.i < 1 || b.j > dim || b.i >= b.j || b.k < 1 || b.k > dim) {
      std::ostringstream os;
      os << "bracket entry (" << b.i << ", " << b.j << ", " << b.k
         << ") needs 1 <= i < j <= n and 1 <= k <= n";
      throw InputError(os.str());
    }
    const int i = b.i - 1, j = b.j - 1, k = b.k - 1;
    c[(k * dim + i) * dim + j] += b.value;
    c[(k * dim + j) * dim + i] -= b.value;
  }
  return LieAlgebra(dim, std::move(c));
}

LieAlgebra LieAlgebra::abelian(int dim) {
  return LieAlgebra(dim, std::vector<double>(static_cast<std::size_t>(dim) * dim * dim, 0.0));
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(c_.begin(), c_.end(), [](double v) { return v == 0.0; });
}

namespace {

void require_dim(const LieAlgebra& L, const Vector& x, const char* what) {
  if (x.size() != L.dim()) {
    std::ostringstream os;
    os << what << " has length " << x.size() << ", expected " << L.dim();
    throw InputError(os.str());
  }
}

}  // namespace

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y) {
  require_dim(L, x, "bracket argument x");
  require_dim(L, y, "bracket argument y");
  const int n = L.dim();
  Vector z = Vector::Zero(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (x(i) == 0.0) continue;
      for (int j = 0; j < n; ++j) z(k) += L.constant(k, i, j) * x(i) * y(j);
    }
  return z;
}

Matrix ad(const LieAlgebra& L, const Vector& z) {
  require_dim(L, z, "ad argument");
  const int n = L.dim();
  Matrix m = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) m(k, j) += L.constant(k, i, j) * z(i);
  return m;
}

double jacobi_defect(const LieAlgebra& L) {
  const int n = L.dim();
  double worst = 0.0;
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int k = 0; k < n; ++k)
            s += L.constant(m, i, k) * L.constant(k, j, l) + L.constant(m, j, k) * L.constant(k, l, i) +
                 L.constant(m, l, k) * L.constant(k, i, j);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

void require_jacobi(const LieAlgebra& L, double tol) {
  const double defect = jacobi_defect(L);
  if (defect > tol) {
    std::ostringstream os;
    os << "jacobi_defect = " << defect << " exceeds " << tol;
    throw JacobiError(os.str(), defect);
  }
}

namespace {

// Orthonormal basis (columns) of the column span of m.
Matrix span_basis(const Matrix& m) {
  if (m.cols() == 0) return Matrix(m.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > 1e-9) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace

std::optional<int> nilpotency_step(const LieAlgebra& L) {
  const int n = L.dim();
  Matrix term = Matrix::Identity(n, n);  // g^1
  for (int s = 1; s <= n + 1; ++s) {
    // g^(s+1) = [g, g^s]
    Matrix gens(n, n * term.cols());
    for (int i = 0; i < n; ++i) {
      const Matrix adi = ad(L, Vector::Unit(n, i));
      for (int c = 0; c < term.cols(); ++c) gens.col(i * term.cols() + c) = adi * term.col(c);
    }
    Matrix next = span_basis(gens);
    if (next.cols() == 0) return s;
    if (next.cols() == term.cols()) return std::nullopt;
    term = std::move(next);
  }
  return std::nullopt;
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& basis) {
  const int n = L.dim();
  if (basis.rows() != n || basis.cols() != n) throw InputError("basis change must be n x n");
  const Matrix inv = basis.inverse();
  std::vector<double> c(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Vector coeffs = inv * bracket(L, basis.col(a), basis.col(b));
      for (int k = 0; k < n; ++k) {
        c[(k * n + a) * n + b] = coeffs(k);
        c[(k * n + b) * n + a] = -coeffs(k);
      }
    }
  return LieAlgebra(n, std::move(c));
}

}  // namespace scf
