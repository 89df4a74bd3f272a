#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "scflab/ak_structure.hpp"
#include "scflab/catalog.hpp"
#include "scflab/curvature.hpp"
#include "scflab/lie_algebra.hpp"

// Reference computations written directly from the defining formulas, kept
// apart from the library code paths they check.
namespace oracle {

using scf::LieAlgebra;
using scf::Matrix;
using scf::Vector;

inline Vector e(int n, int i) { return Vector::Unit(n, i); }

inline double max_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline Vector br(const LieAlgebra& L, const Vector& x, const Vector& y) {
  const int n = L.dim();
  Vector z = Vector::Zero(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) z(k) += L.constant(k, i, j) * x(i) * y(j);
  return z;
}

inline double jacobiator(const LieAlgebra& L) {
  const int n = L.dim();
  double worst = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const Vector x = e(n, a), y = e(n, b), z = e(n, c);
        const Vector j = br(L, x, br(L, y, z)) + br(L, y, br(L, z, x)) + br(L, z, br(L, x, y));
        worst = std::max(worst, j.cwiseAbs().maxCoeff());
      }
  return worst;
}

inline int rank(const Matrix& m) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

// d on 1-forms as a matrix from R^n to pairs i<j, built from d theta(X,Y) = -theta([X,Y]).
inline Matrix d1(const LieAlgebra& L) {
  const int n = L.dim();
  Matrix m = Matrix::Zero(n * (n - 1) / 2, n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++row) m.row(row) = -br(L, e(n, i), e(n, j)).transpose();
  return m;
}

// d on 2-forms, columns indexed by pairs p<q, rows by triples i<j<l.
inline Matrix d2(const LieAlgebra& L) {
  const int n = L.dim();
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) pairs.emplace_back(p, q);
  int triples = n * (n - 1) * (n - 2) / 6;
  Matrix m = Matrix::Zero(triples, static_cast<int>(pairs.size()));
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    Matrix B = Matrix::Zero(n, n);
    B(pairs[col].first, pairs[col].second) = 1;
    B(pairs[col].second, pairs[col].first) = -1;
    auto form = [&](const Vector& x, const Vector& y) { return x.dot(B * y); };
    int row = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int l = j + 1; l < n; ++l, ++row) {
          const Vector x = e(n, i), y = e(n, j), z = e(n, l);
          m(row, static_cast<int>(col)) =
              -form(br(L, x, y), z) + form(br(L, x, z), y) - form(br(L, y, z), x);
        }
  }
  return m;
}

inline int betti(const LieAlgebra& L, int k) {
  const int n = L.dim();
  if (k == 0) return 1;
  if (k == 1) return n - rank(d1(L));
  return n * (n - 1) / 2 - rank(d2(L)) - rank(d1(L));
}

// A_{e_j} e_i from the Koszul identity, solved column by column.
inline Matrix connection_along(const LieAlgebra& L, const Matrix& g, int j) {
  const int n = L.dim();
  Matrix A = Matrix::Zero(n, n);
  auto G = [&](const Vector& x, const Vector& y) { return x.dot(g * y); };
  for (int i = 0; i < n; ++i) {
    Vector rhs(n);
    for (int k = 0; k < n; ++k) {
      const Vector ej = e(n, j), ei = e(n, i), ek = e(n, k);
      rhs(k) = 0.5 * (G(br(L, ej, ei), ek) - G(br(L, ej, ek), ei) - G(br(L, ei, ek), ej));
    }
    A.col(i) = g.fullPivLu().solve(rhs);
  }
  return A;
}

inline double kt_alpha(double a0, double b0, double t) { return a0 * std::pow(1 + 2.5 * a0 * a0 * b0 * t, -0.4); }
inline double kt_beta(double a0, double b0, double t) { return b0 * std::pow(1 + 2.5 * a0 * a0 * b0 * t, -0.2); }

inline double n4_y(double t) { return std::pow(1 + 2.5 * t, 0.2); }

// The closed-form n4 entries written out as displayed.
struct N4Closed {
  double a, b, c, d, ap, bp, cp, dp;
};
inline N4Closed n4_closed(double y) {
  return {1 / y - std::pow(y, -3), 2 / y - std::pow(y, -3), 2 * y - 1 / y, -y + 1 / y,
          -y + 1 / y,              -1 / y,                  -std::pow(y, -3), 1 / y - std::pow(y, -3)};
}
inline Matrix n4_J(const N4Closed& p) {
  Matrix J(4, 4);
  J << 0, p.ap, p.bp, 0, p.a, 0, 0, p.cp, p.b, 0, 0, p.dp, 0, p.c, p.d, 0;
  return J;
}
inline Matrix n4_omega(double y) {
  Matrix w = Matrix::Zero(4, 4);
  w(0, 2) = 1;
  w(1, 3) = 1;
  w(0, 1) = 2 * (y * y - 1);
  return w - w.transpose();
}

}  // namespace oracle
