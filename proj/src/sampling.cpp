#include "scflab/sampling.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "scflab/errors.hpp"

namespace scf {

namespace {

double normal(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Matrix random_matrix(int n, Rng& rng) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = normal(rng);
  return m;
}

}  // namespace

Vector random_vector(int n, Rng& rng, double scale) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = scale * normal(rng);
  return v;
}

OneForm random_one_form(int n, Rng& rng) { return OneForm(random_vector(n, rng)); }

TwoForm random_two_form(int n, Rng& rng) { return TwoForm::from_upper(random_matrix(n, rng)); }

Matrix random_spd(int n, Rng& rng) {
  const Eigen::HouseholderQR<Matrix> qr(random_matrix(n, rng));
  const Matrix Q = qr.householderQ();
  Vector d(n);
  for (int i = 0; i < n; ++i) d(i) = uniform(rng, 0.5, 2.5);
  const Matrix g = Q * d.asDiagonal() * Q.transpose();
  return 0.5 * (g + g.transpose());
}

LieAlgebra random_basis_change(const LieAlgebra& L, Rng& rng) {
  const int n = L.dim();
  for (;;) {
    const Matrix basis = Matrix::Identity(n, n) + 0.3 * random_matrix(n, rng);
    const Eigen::JacobiSVD<Matrix> svd(basis);
    const auto& s = svd.singularValues();
    if (s(n - 1) > 0.3 && s(0) / s(n - 1) < 10.0) return change_basis(L, basis);
  }
}

AlmostKahlerStructure random_symplectic_conjugate(const AlmostKahlerStructure& S, Rng& rng, double scale) {
  const int n = S.algebra.dim();
  const Matrix omega_inv = S.omega.matrix().inverse();
  Matrix H = random_matrix(n, rng);
  H = (0.5 * scale * (H + H.transpose())).eval();
  // X = Omega^-1 H is infinitesimally symplectic, so exp(X) preserves omega.
  const Matrix X = omega_inv * H;
  const Matrix sym = X.exp();
  const Endomorphism J = sym * S.J * sym.inverse();
  return AlmostKahlerStructure{S.algebra, S.omega, J};
}

N4FamilyParams random_n4_params(Rng& rng) {
  for (;;) {
    Eigen::Matrix2d K;
    K << 0, -1, 1, 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) K(i, j) += 0.3 * normal(rng);
    if (std::abs(K.determinant()) < 0.2) continue;
    const Eigen::Matrix2d M = -K.inverse();
    N4FamilyParams p;
    p.a = K(0, 0);
    p.cp = K(0, 1);
    p.b = K(1, 0);
    p.dp = K(1, 1);
    p.ap = M(0, 0);
    p.bp = M(0, 1);
    p.c = M(1, 0);
    p.d = M(1, 1);
    if (std::abs(p.bp) < 0.2) continue;
    const Matrix omega = (TwoForm::wedge(4, 0, 2) + TwoForm::wedge(4, 1, 3) + TwoForm::wedge(4, 0, 1, p.gamma()))
                             .matrix();
    if (min_symmetric_eigenvalue(omega * p.J()) < 0.05) continue;
    return p;
  }
}

AlmostKahlerStructure random_catalog_structure(const std::string& name, Rng& rng) {
  AlmostKahlerStructure base = [&] {
    if (name == "kodaira_thurston")
      return kodaira_thurston(uniform(rng, 0.5, 2.0), uniform(rng, 0.5, 2.0)).initial_structure();
    if (name == "heisenberg_sum")
      return heisenberg_sum(uniform(rng, 0.5, 2.0), uniform(rng, 0.5, 2.0), uniform(rng, 0.5, 2.0))
          .initial_structure();
    if (name == "n4") return n4_family(random_n4_params(rng));
    throw InputError("unknown example '" + name + "'");
  }();
  return random_symplectic_conjugate(base, rng);
}

}  // namespace scf
