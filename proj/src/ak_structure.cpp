#include "scflab/ak_structure.hpp"

#include <sstream>

#include "scflab/errors.hpp"

namespace scf {

double min_symmetric_eigenvalue(const Matrix& m) {
  const Matrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Metric::Metric(Matrix components) : g_(std::move(components)) {
  if (g_.rows() != g_.cols()) throw InputError("metric must be square");
  for (int i = 0; i < g_.rows(); ++i)
    for (int j = i + 1; j < g_.cols(); ++j)
      if (g_(i, j) != g_(j, i)) throw InputError("metric is not symmetric");
  if (!g_.allFinite()) throw DegenerateMetric("metric has non-finite entries", 0.0);
  min_eig_ = min_symmetric_eigenvalue(g_);
  if (!(min_eig_ > 0)) {
    std::ostringstream os;
    os << "metric is not positive definite (smallest eigenvalue " << min_eig_ << ")";
    throw DegenerateMetric(os.str(), min_eig_);
  }
  llt_.compute(g_);
  if (llt_.info() != Eigen::Success) throw DegenerateMetric("metric factorization failed", min_eig_);
}

Matrix Metric::orthonormal_frame() const {
  const Matrix lower = llt_.matrixL();
  // g = L L^T, so F = L^-T satisfies F^T g F = I.
  return lower.transpose().triangularView<Eigen::Upper>().solve(Matrix::Identity(dim(), dim()));
}

Matrix Metric::solve(const Matrix& rhs) const { return llt_.solve(rhs); }

double metric_asymmetry(const TwoForm& omega, const Endomorphism& J) {
  const Matrix g = omega.matrix() * J;
  return (g - g.transpose()).cwiseAbs().maxCoeff();
}

Metric metric_of(const TwoForm& omega, const Endomorphism& J) {
  if (J.rows() != omega.dim() || J.cols() != omega.dim())
    throw InputError("J and omega have different dimensions");
  const Matrix g = omega.matrix() * J;
  Matrix sym = 0.5 * (g + g.transpose());
  try {
    return Metric(std::move(sym));
  } catch (const DegenerateMetric& e) {
    std::ostringstream os;
    os << "incompatible pair: g = omega(., J.) has smallest eigenvalue " << e.min_eigenvalue();
    throw DegenerateMetric(os.str(), e.min_eigenvalue());
  }
}

std::vector<std::string> StructureReport::failures() const {
  std::vector<std::string> out;
  if (!j_squared_ok()) out.emplace_back("J^2 = -I");
  if (!compatibility_ok()) out.emplace_back("omega(J.,J.) = omega");
  if (!closedness_ok()) out.emplace_back("d omega = 0");
  if (!metric_ok()) out.emplace_back("g positive definite");
  return out;
}

StructureReport check_structure(const AlmostKahlerStructure& S, double tol) {
  const int n = S.algebra.dim();
  if (S.omega.dim() != n || S.J.rows() != n || S.J.cols() != n)
    throw InputError("structure dimensions do not match the algebra");
  StructureReport r;
  r.tol = tol;
  r.j_squared = (S.J * S.J + Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  r.compatibility = (S.J.transpose() * S.omega.matrix() * S.J - S.omega.matrix()).cwiseAbs().maxCoeff();
  r.closedness = ce_d2(S.algebra, S.omega).max_abs();
  const Matrix g = S.omega.matrix() * S.J;
  r.min_eig_g = min_symmetric_eigenvalue(g);
  r.metric_asymmetry = (g - g.transpose()).cwiseAbs().maxCoeff();
  return r;
}

AlmostKahlerStructure make_structure(LieAlgebra algebra, TwoForm omega, Endomorphism J, double tol) {
  AlmostKahlerStructure S{std::move(algebra), std::move(omega), std::move(J)};
  const auto report = check_structure(S, tol);
  if (!report.passed()) {
    std::ostringstream os;
    os << "not an almost Kahler structure:";
    for (const auto& f : report.failures()) os << " [" << f << "]";
    throw InputError(os.str());
  }
  return S;
}

Matrix anti_invariant_part(const Matrix& B, const Endomorphism& J) {
  return 0.5 * (B - J.transpose() * B * J);
}

TwoForm anti_invariant_part(const TwoForm& B, const Endomorphism& J) {
  return TwoForm::from_upper(anti_invariant_part(B.matrix(), J));
}

TwoForm invariant_part(const TwoForm& B, const Endomorphism& J) {
  return B - anti_invariant_part(B, J);
}

Endomorphism raise(const Metric& g, const Matrix& B) { return g.solve(B.transpose()); }

Endomorphism raise(const Metric& g, const TwoForm& B) { return raise(g, B.matrix()); }

Matrix lower(const Metric& g, const Endomorphism& E) { return E.transpose() * g.matrix(); }

Endomorphism commutator_anti_part(const Endomorphism& Rc, const Endomorphism& J) { return Rc * J - J * Rc; }

}  // namespace scf
