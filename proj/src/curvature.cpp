#include "scflab/curvature.hpp"

#include <algorithm>
#include <cmath>

#include "scflab/errors.hpp"

namespace scf {

namespace {

std::size_t cube(int n) { return static_cast<std::size_t>(n) * n * n; }

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

ConnectionForm::ConnectionForm(int dim, std::vector<double> components) : dim_(dim), a_(std::move(components)) {
  if (a_.size() != cube(dim)) throw InputError("connection form array has wrong size");
}

Matrix ConnectionForm::along(const Vector& z) const {
  Matrix m = Matrix::Zero(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    if (z(j) == 0.0) continue;
    for (int k = 0; k < dim_; ++k)
      for (int i = 0; i < dim_; ++i) m(k, i) += (*this)(k, i, j) * z(j);
  }
  return m;
}

Matrix ConnectionForm::along_basis(int j) const {
  Matrix m(dim_, dim_);
  for (int k = 0; k < dim_; ++k)
    for (int i = 0; i < dim_; ++i) m(k, i) = (*this)(k, i, j);
  return m;
}

CurvatureTensor::CurvatureTensor(int dim, std::vector<double> components) : dim_(dim), r_(std::move(components)) {
  if (r_.size() != cube(dim) * dim) throw InputError("curvature array has wrong size");
}

Matrix CurvatureTensor::at(int i, int j) const {
  Matrix m(dim_, dim_);
  for (int k = 0; k < dim_; ++k)
    for (int l = 0; l < dim_; ++l) m(k, l) = (*this)(k, l, i, j);
  return m;
}

double CurvatureTensor::max_abs() const { return scf::max_abs(r_); }

NijenhuisTensor::NijenhuisTensor(int dim, std::vector<double> components) : dim_(dim), n_(std::move(components)) {
  if (n_.size() != cube(dim)) throw InputError("Nijenhuis array has wrong size");
}

Vector NijenhuisTensor::at(int i, int j) const {
  Vector v(dim_);
  for (int k = 0; k < dim_; ++k) v(k) = (*this)(k, i, j);
  return v;
}

Vector NijenhuisTensor::apply(const Vector& x, const Vector& y) const {
  Vector v = Vector::Zero(dim_);
  for (int k = 0; k < dim_; ++k)
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) v(k) += (*this)(k, i, j) * x(i) * y(j);
  return v;
}

double NijenhuisTensor::max_abs() const { return scf::max_abs(n_); }

ConnectionForm levi_civita(const LieAlgebra& L, const Metric& g) {
  const int n = L.dim();
  if (g.dim() != n) throw InputError("metric dimension does not match the algebra");
  const Matrix& gm = g.matrix();
  // gb(a, b, l) = g([e_a, e_b], e_l)
  std::vector<double> gb(cube(n), 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int l = 0; l < n; ++l) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += L.constant(k, a, b) * gm(k, l);
        gb[(a * n + b) * n + l] = s;
      }
  auto G = [&](int a, int b, int l) { return gb[(a * n + b) * n + l]; };

  // Column (i * n + j) holds g(A_{e_j} e_i, e_l) over l.
  Matrix rhs(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) rhs(l, i * n + j) = 0.5 * (G(j, i, l) - G(j, l, i) - G(i, l, j));
  const Matrix sol = g.solve(rhs);

  std::vector<double> a(cube(n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[(k * n + i) * n + j] = sol(k, i * n + j);
  return ConnectionForm(n, std::move(a));
}

CurvatureTensor riemann(const LieAlgebra& L, const ConnectionForm& A) {
  const int n = L.dim();
  if (A.dim() != n) throw InputError("connection dimension does not match the algebra");
  std::vector<Matrix> basis(n);
  for (int j = 0; j < n; ++j) basis[j] = A.along_basis(j);
  std::vector<double> r(cube(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vector br = bracket(L, Vector::Unit(n, i), Vector::Unit(n, j));
      const Matrix Rij = basis[i] * basis[j] - basis[j] * basis[i] - A.along(br);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          r[((k * n + l) * n + i) * n + j] = Rij(k, l);
          r[((k * n + l) * n + j) * n + i] = -Rij(k, l);
        }
    }
  return CurvatureTensor(n, std::move(r));
}

Ricci ricci(const CurvatureTensor& R) {
  const int n = R.dim();
  Matrix ric = Matrix::Zero(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) ric(x, y) += R(z, y, z, x);
  Ricci out;
  out.asymmetry = (ric - ric.transpose()).cwiseAbs().maxCoeff();
  out.form = 0.5 * (ric + ric.transpose());
  return out;
}

Endomorphism ricci_endomorphism(const Metric& g, const Matrix& ric) { return g.solve(ric); }

ConnectionForm chern_connection(const ConnectionForm& A, const Endomorphism& J) {
  const int n = A.dim();
  std::vector<double> c(cube(n));
  for (int j = 0; j < n; ++j) {
    const Matrix Aj = A.along_basis(j);
    const Matrix Cj = 0.5 * (Aj - J * Aj * J);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) c[(k * n + i) * n + j] = Cj(k, i);
  }
  return ConnectionForm(n, std::move(c));
}

TwoForm chern_ricci_trace(const LieAlgebra& L, const ConnectionForm& A, const Endomorphism& J) {
  const int n = L.dim();
  Matrix up = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vector br = bracket(L, Vector::Unit(n, i), Vector::Unit(n, j));
      up(i, j) = -(A.along(br) * J).trace();
    }
  return TwoForm::from_upper(up);
}

TwoForm chern_ricci_adjoint(const LieAlgebra& L, const Endomorphism& J) {
  const int n = L.dim();
  Matrix up = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vector w = bracket(L, Vector::Unit(n, i), Vector::Unit(n, j));
      const Matrix adw = ad(L, w);
      up(i, j) = -0.5 * (adw * J + J * adw).trace() - ad(L, J * w).trace();
    }
  return TwoForm::from_upper(up);
}

NijenhuisTensor nijenhuis(const LieAlgebra& L, const Endomorphism& J) {
  const int n = L.dim();
  std::vector<double> out(cube(n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vector x = Vector::Unit(n, i), y = Vector::Unit(n, j);
      const Vector jx = J * x, jy = J * y;
      const Vector v = bracket(L, jx, jy) - J * bracket(L, jx, y) - J * bracket(L, x, jy) - bracket(L, x, y);
      for (int k = 0; k < n; ++k) {
        out[(k * n + i) * n + j] = v(k);
        out[(k * n + j) * n + i] = -v(k);
      }
    }
  return NijenhuisTensor(n, std::move(out));
}

double norm_nijenhuis(const Metric& g, const NijenhuisTensor& N) {
  const int n = g.dim();
  const Matrix F = g.orthonormal_frame();
  double s = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Vector v = N.apply(F.col(a), F.col(b));
      s += v.dot(g.matrix() * v);
    }
  return s;
}

double norm_riemann(const Metric& g, const CurvatureTensor& R) {
  const int n = g.dim();
  const Matrix F = g.orthonormal_frame();
  // Coefficients of vectors in the orthonormal frame: e-components -> f-components.
  const Matrix Finv = F.inverse();
  double s = 0.0;
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) {
      Matrix Rcd = Matrix::Zero(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const double w = F(i, c) * F(j, d);
          if (w != 0.0) Rcd += w * R.at(i, j);
        }
      // In an orthonormal frame g(R f_b, f_a) is the (a, b) entry of the frame matrix.
      const Matrix inFrame = Finv * Rcd * F;
      s += inFrame.squaredNorm();
    }
  return kRiemannNormCalibration * s;
}

CurvatureReport curvature_of(const LieAlgebra& L, const TwoForm& omega, const Endomorphism& J) {
  Metric g = metric_of(omega, J);
  ConnectionForm A = levi_civita(L, g);
  CurvatureTensor R = riemann(L, A);
  Ricci ric = ricci(R);
  Endomorphism Rc = ricci_endomorphism(g, ric.form);
  TwoForm P = chern_ricci_trace(L, A, J);
  return CurvatureReport{std::move(g), std::move(A), std::move(R), std::move(ric), std::move(Rc), std::move(P)};
}

}  // namespace scf
