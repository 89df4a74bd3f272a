#include "scflab/forms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "scflab/errors.hpp"

namespace scf {

OneForm::OneForm(Vector components) : v_(std::move(components)) {
  if (!v_.allFinite()) throw InputError("one-form has non-finite components");
}

OneForm OneForm::basis(int dim, int index) { return OneForm(Vector::Unit(dim, index)); }

TwoForm::TwoForm(Matrix components) : m_(std::move(components)) {
  if (m_.rows() != m_.cols()) throw InputError("two-form must be square");
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = i; j < m_.cols(); ++j)
      if (m_(i, j) != -m_(j, i)) {
        std::ostringstream os;
        os << "two-form not antisymmetric at (" << i + 1 << ", " << j + 1 << ")";
        throw InputError(os.str());
      }
}

TwoForm TwoForm::zero(int dim) { return TwoForm(Matrix::Zero(dim, dim)); }

TwoForm TwoForm::wedge(int dim, int i, int j, double value) {
  Matrix m = Matrix::Zero(dim, dim);
  m(i, j) += value;
  m(j, i) -= value;
  return TwoForm(std::move(m));
}

TwoForm TwoForm::from_upper(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  Matrix out = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out(i, j) = m(i, j);
      out(j, i) = -m(i, j);
    }
  return TwoForm(std::move(out));
}

ThreeForm::ThreeForm(int dim, std::vector<double> components) : dim_(dim), c_(std::move(components)) {
  if (c_.size() != static_cast<std::size_t>(dim) * dim * dim)
    throw InputError("three-form array has wrong size");
  const int n = dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const double v = (*this)(i, j, l);
        if ((*this)(j, i, l) != -v || (*this)(i, l, j) != -v)
          throw InputError("three-form is not totally antisymmetric");
      }
}

double ThreeForm::max_abs() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

TwoForm ce_d1(const LieAlgebra& L, const OneForm& theta) {
  const int n = L.dim();
  if (theta.dim() != n) throw InputError("one-form dimension does not match the algebra");
  Matrix up = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s -= theta[k] * L.constant(k, i, j);
      up(i, j) = s;
    }
  return TwoForm::from_upper(up);
}

namespace {

// B([e_i, e_j], e_l)
double form_on_bracket(const LieAlgebra& L, const Matrix& B, int i, int j, int l) {
  double s = 0.0;
  for (int k = 0; k < L.dim(); ++k) s += L.constant(k, i, j) * B(k, l);
  return s;
}

std::vector<std::pair<int, int>> pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

struct Triple {
  int i, j, l;
};

std::vector<Triple> triples(int n) {
  std::vector<Triple> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l) out.push_back({i, j, l});
  return out;
}

int rank_of(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  return static_cast<int>((s.array() > kRankTolerance).count());
}

}  // namespace

ThreeForm ce_d2(const LieAlgebra& L, const TwoForm& B) {
  const int n = L.dim();
  if (B.dim() != n) throw InputError("two-form dimension does not match the algebra");
  const Matrix& b = B.matrix();
  std::vector<double> out(static_cast<std::size_t>(n) * n * n, 0.0);
  auto at = [&](int i, int j, int l) -> double& { return out[(i * n + j) * n + l]; };
  for (const auto& [i, j, l] : triples(n)) {
    const double v =
        -form_on_bracket(L, b, i, j, l) + form_on_bracket(L, b, i, l, j) - form_on_bracket(L, b, j, l, i);
    at(i, j, l) = v;
    at(j, l, i) = v;
    at(l, i, j) = v;
    at(j, i, l) = -v;
    at(i, l, j) = -v;
    at(l, j, i) = -v;
  }
  return ThreeForm(n, std::move(out));
}

Matrix ce_d1_matrix(const LieAlgebra& L) {
  const int n = L.dim();
  const auto ps = pairs(n);
  Matrix m = Matrix::Zero(static_cast<int>(ps.size()), n);
  for (std::size_t r = 0; r < ps.size(); ++r)
    for (int k = 0; k < n; ++k) m(static_cast<int>(r), k) = -L.constant(k, ps[r].first, ps[r].second);
  return m;
}

Matrix ce_d2_matrix(const LieAlgebra& L) {
  const int n = L.dim();
  const auto ps = pairs(n);
  const auto ts = triples(n);
  Matrix m = Matrix::Zero(static_cast<int>(ts.size()), static_cast<int>(ps.size()));
  for (std::size_t c = 0; c < ps.size(); ++c) {
    const TwoForm basis = TwoForm::wedge(n, ps[c].first, ps[c].second);
    const ThreeForm d = ce_d2(L, basis);
    for (std::size_t r = 0; r < ts.size(); ++r)
      m(static_cast<int>(r), static_cast<int>(c)) = d(ts[r].i, ts[r].j, ts[r].l);
  }
  return m;
}

int ce_betti(const LieAlgebra& L, int degree) {
  const int n = L.dim();
  switch (degree) {
    case 0:
      return 1;
    case 1:
      return n - rank_of(ce_d1_matrix(L));
    case 2: {
      const int two_forms = n * (n - 1) / 2;
      return two_forms - rank_of(ce_d2_matrix(L)) - rank_of(ce_d1_matrix(L));
    }
    default:
      throw InputError("ce_betti supports degrees 0, 1 and 2");
  }
}

std::optional<OneForm> exact_primitive(const LieAlgebra& L, const TwoForm& B, double tol) {
  const int n = L.dim();
  if (B.dim() != n) throw InputError("two-form dimension does not match the algebra");
  const Matrix d1 = ce_d1_matrix(L);
  const auto ps = pairs(n);
  Vector rhs(static_cast<int>(ps.size()));
  for (std::size_t r = 0; r < ps.size(); ++r) rhs(static_cast<int>(r)) = B(ps[r].first, ps[r].second);
  if (ps.empty()) return OneForm(Vector::Zero(n));
  const Vector theta = d1.completeOrthogonalDecomposition().solve(rhs);
  OneForm primitive(theta);
  const double residual = (ce_d1(L, primitive) - B).max_abs();
  if (residual >= tol) return std::nullopt;
  return primitive;
}

}  // namespace scf
