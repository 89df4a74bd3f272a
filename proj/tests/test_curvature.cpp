#include <doctest.h>

#include "scflab/catalog.hpp"
#include "scflab/flow.hpp"
#include "scflab/forms.hpp"
#include "scflab/sampling.hpp"
#include "support.hpp"

using namespace scf;
using oracle::e;

namespace {

struct Built {
  AlmostKahlerStructure S;
  CurvatureReport cr;
};

Built build(const AlmostKahlerStructure& S) { return {S, curvature_of(S.algebra, S.omega, S.J)}; }

double rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

// Standard pair on R^n: omega = sum e^{2i-1} ^ e^{2i}, J e_{2i-1} = e_{2i}.
AlmostKahlerStructure flat_structure(int n) {
  Matrix w = Matrix::Zero(n, n), J = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; i += 2) {
    w(i, i + 1) = 1;
    w(i + 1, i) = -1;
    J(i + 1, i) = 1;
    J(i, i + 1) = -1;
  }
  return {LieAlgebra::abelian(n), TwoForm(w), J};
}

// The displayed 2 d14 d23 A for n4, as the four matrices multiplying e^1..e^4.
std::array<Matrix, 4> n4_connection_display(const Matrix& g) {
  const double g11 = g(0, 0), g14 = g(0, 3), g22 = g(1, 1), g23 = g(1, 2), g33 = g(2, 2), g44 = g(3, 3);
  const double d14 = g11 * g44 - g14 * g14, d23 = g22 * g33 - g23 * g23;
  std::array<Matrix, 4> m;
  for (auto& x : m) x = Matrix::Zero(4, 4);
  m[0](1, 1) = -g23 * (g33 - g14) * d14;
  m[0](1, 2) = -g33 * (g33 - g14) * d14;
  m[0](2, 1) = g22 * (g33 - g14) * d14;
  m[0](2, 2) = g23 * (g33 - g14) * d14;
  m[3](1, 1) = g23 * g44 * d14;
  m[3](1, 2) = g33 * g44 * d14;
  m[3](2, 1) = -g22 * g44 * d14;
  m[3](2, 2) = -g23 * g44 * d14;
  m[1](0, 1) = 2 * g23 * g44 * d23;
  m[1](0, 2) = g33 * g44 * d23;
  m[1](1, 0) = -g23 * (g33 - g14) * d14;
  m[1](1, 3) = g23 * g44 * d14;
  m[1](2, 0) = -(d23 + g22 * g14 - g23 * g23) * d14;
  m[1](2, 3) = -g22 * g44 * d14;
  m[1](3, 1) = -2 * g23 * g14 * d23;
  m[1](3, 2) = (d14 - g14 * g33) * d23;
  m[2](0, 1) = g33 * g44 * d23;
  m[2](1, 0) = -g33 * (g33 - g14) * d14;
  m[2](1, 3) = g33 * g44 * d14;
  m[2](2, 0) = g23 * (g33 - g14) * d14;
  m[2](2, 3) = -g23 * g44 * d14;
  m[2](3, 1) = -(d14 + g14 * g33) * d23;
  return m;
}

}  // namespace

TEST_SUITE("curvature") {
  TEST_CASE("abelian algebras are flat and integrable") {
    Rng rng(21);
    for (int n : {2, 4, 6}) {
      const Built b = build(flat_structure(n));
      const Metric g(random_spd(n, rng));
      const ConnectionForm A = levi_civita(b.S.algebra, g);
      for (int j = 0; j < n; ++j) CHECK(A.along_basis(j).cwiseAbs().maxCoeff() == 0.0);
      CHECK(b.cr.R.max_abs() == 0.0);
      CHECK(b.cr.ric.form.cwiseAbs().maxCoeff() == 0.0);
      CHECK(b.cr.P.max_abs() == 0.0);
      CHECK(chern_ricci_adjoint(b.S.algebra, b.S.J).max_abs() == 0.0);
      const ConnectionForm C = chern_connection(b.cr.A, b.S.J);
      for (int j = 0; j < n; ++j) CHECK(C.along_basis(j).cwiseAbs().maxCoeff() == 0.0);
      const NijenhuisTensor N = nijenhuis(b.S.algebra, b.S.J);
      CHECK(N.max_abs() == 0.0);
      CHECK(norm_nijenhuis(b.cr.g, N) == 0.0);
      CHECK(norm_riemann(b.cr.g, b.cr.R) == 0.0);
    }
  }

  TEST_CASE("Levi-Civita connection of the Kodaira-Thurston family") {
    for (auto [a, bb] : {std::pair{1.0, 1.0}, {0.6, 1.9}, {2.2, 0.35}}) {
      const Built b = build(kodaira_thurston(a, bb).initial_structure());
      std::vector<double> expected(64, 0.0);
      auto set = [&](int k, int i, int j, double v) { expected[(k * 4 + i) * 4 + j] = v; };
      set(0, 1, 2, a * a / 2);
      set(0, 2, 1, a * a / 2);
      set(1, 0, 2, -a * bb / 2);
      set(1, 2, 0, -a * bb / 2);
      set(2, 0, 1, -0.5);
      set(2, 1, 0, 0.5);
      for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            CHECK(b.cr.A(k, i, j) == doctest::Approx(expected[(k * 4 + i) * 4 + j]).epsilon(1e-13));
    }
  }

  TEST_CASE("Levi-Civita agrees with a direct Koszul solve, is metric and torsion free") {
    Rng rng(22);
    const std::vector<LieAlgebra> algebras{kodaira_thurston_algebra(), heisenberg_sum_algebra(), n4_algebra()};
    for (const auto& base : algebras)
      for (int s = 0; s < 10; ++s) {
        const LieAlgebra L = random_basis_change(base, rng);
        const int n = L.dim();
        const Metric g(random_spd(n, rng));
        const ConnectionForm A = levi_civita(L, g);
        for (int j = 0; j < n; ++j) {
          REQUIRE(oracle::max_diff(A.along_basis(j), oracle::connection_along(L, g.matrix(), j)) <= 1e-10);
          const Matrix Aj = A.along_basis(j);
          REQUIRE(oracle::max_diff(Aj.transpose() * g.matrix(), -g.matrix() * Aj) <= 1e-10);
        }
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            const Vector torsion = A.along_basis(i) * e(n, j) - A.along_basis(j) * e(n, i) - oracle::br(L, e(n, i), e(n, j));
            REQUIRE(torsion.cwiseAbs().maxCoeff() <= 1e-10);
          }
      }
  }

  TEST_CASE("n4 connection matches the displayed closed form") {
    for (double t : {0.0, 0.4, 3.0}) {
      const N4FamilyParams p = N4FamilyParams::analytic(t);
      const Built b = build(n4_family(p));
      const Matrix g = b.cr.g.matrix();
      const double d14 = g(0, 0) * g(3, 3) - g(0, 3) * g(0, 3);
      const double d23 = g(1, 1) * g(2, 2) - g(1, 2) * g(1, 2);
      CHECK(d14 * d23 == doctest::Approx(1.0).epsilon(1e-12));
      const auto display = n4_connection_display(g);
      for (int j = 0; j < 4; ++j)
        CHECK(oracle::max_diff(2 * d14 * d23 * b.cr.A.along_basis(j), display[j]) <= 1e-12);
    }
  }

  TEST_CASE("Riemann tensor is antisymmetric in its form slots") {
    Rng rng(23);
    for (const auto& name : list_entries()) {
      const Built b = build(random_catalog_structure(name, rng));
      const int n = b.S.algebra.dim();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(oracle::max_diff(b.cr.R.at(i, j), -b.cr.R.at(j, i)) == 0.0);
    }
  }

  TEST_CASE("Ricci of the Kodaira-Thurston family") {
    for (auto [a, bb] : {std::pair{1.0, 1.0}, {0.6, 1.9}, {2.2, 0.35}}) {
      const Built b = build(kodaira_thurston(a, bb).initial_structure());
      const Matrix expected = 0.5 * Vector{{-a * bb, -a * a, a * a * a * bb, 0.0}}.asDiagonal().toDenseMatrix();
      CHECK(oracle::max_diff(b.cr.ric.form, expected) <= 1e-12 * (1 + a * a * a * bb));
    }
    const Built unit = build(kodaira_thurston(1, 1).initial_structure());
    CHECK(oracle::max_diff(unit.cr.ric.form, Vector{{-0.5, -0.5, 0.5, 0.0}}.asDiagonal().toDenseMatrix()) <= 1e-14);
  }

  TEST_CASE("Ricci of the Heisenberg sum family") {
    for (auto [a, bb, c] : {std::tuple{1.0, 1.0, 1.0}, {1.0, 2.0, 3.0}, {0.4, 0.7, 1.6}}) {
      const Built b = build(heisenberg_sum(a, bb, c).initial_structure());
      const Matrix expected =
          0.5 * Vector{{-a * bb, -a * a, -c / bb, -c * c, a * a * a * bb, c * c * c / bb}}.asDiagonal().toDenseMatrix();
      CHECK(oracle::max_diff(b.cr.ric.form, expected) <= 1e-12 * (1 + expected.cwiseAbs().maxCoeff()));
    }
  }

  TEST_CASE("Ricci is symmetric before symmetrization") {
    Rng rng(24);
    for (const auto& name : list_entries()) {
      CHECK(build(make_entry(name).initial_structure()).cr.ric.asymmetry <= 1e-9);
      for (int s = 0; s < 10; ++s) CHECK(build(random_catalog_structure(name, rng)).cr.ric.asymmetry <= 1e-9);
    }
  }

  TEST_CASE("Ricci endomorphism") {
    Rng rng(25);
    const Matrix ric = random_spd(4, rng) - Matrix::Identity(4, 4);
    CHECK(oracle::max_diff(ricci_endomorphism(Metric(Matrix::Identity(4, 4)), ric), ric) == 0.0);
    for (int s = 0; s < 20; ++s) {
      const Metric g(random_spd(5, rng));
      Matrix r = Matrix::Random(5, 5);
      r = (r + r.transpose()).eval();
      const Matrix Rc = ricci_endomorphism(g, r);
      REQUIRE(oracle::max_diff(Rc.transpose() * g.matrix(), r) <= 1e-12);
    }
  }

  TEST_CASE("n4 Ricci endomorphism against the displayed matrix") {
    // The display equals 2 Rc entry by entry.
    Rng rng(26);
    for (int s = 0; s < 50; ++s) {
      const N4FamilyParams p = s < 5 ? N4FamilyParams::analytic(0.5 * s) : random_n4_params(rng);
      const Built b = build(n4_family(p));
      const Matrix g = b.cr.g.matrix();
      const double g14 = g(0, 3), g23 = g(1, 2), g33 = g(2, 2), g44 = g(3, 3);
      const double d14 = g(0, 0) * g44 - g14 * g14;
      Matrix display = Matrix::Zero(4, 4);
      display(0, 0) = -g33 * g33 * g44;
      display(1, 1) = -g44 * (g33 * g33 + d14);
      display(2, 1) = 2 * g23 * g33 * g44;
      display(2, 2) = g44 * (g33 * g33 - d14);
      display(3, 0) = g14 * (g33 * g33 + d14);
      display(3, 3) = g44 * d14;
      REQUIRE(oracle::max_diff(2 * b.cr.Rc, display) <= 1e-10 * (1 + display.cwiseAbs().maxCoeff()));
    }
  }

  TEST_CASE("Chern connection") {
    Rng rng(27);
    for (const auto& name : list_entries())
      for (int s = 0; s < 5; ++s) {
        const Built b = build(random_catalog_structure(name, rng));
        const ConnectionForm C = chern_connection(b.cr.A, b.S.J);
        for (int j = 0; j < b.S.algebra.dim(); ++j) {
          const Matrix Cj = C.along_basis(j);
          REQUIRE(oracle::max_diff(Cj * b.S.J, b.S.J * Cj) <= 1e-10);
        }
      }
    const Built kt = build(kodaira_thurston(1.4, 0.8).initial_structure());
    const ConnectionForm C = chern_connection(kt.cr.A, kt.S.J);
    for (int j = 0; j < 4; ++j) CHECK(oracle::max_diff(C.along_basis(j) * kt.S.J, kt.S.J * C.along_basis(j)) <= 1e-12);

    // A connection built from polynomials in J commutes with J and is left alone.
    const Matrix J = flat_structure(4).J;
    std::vector<double> comps(64);
    for (int j = 0; j < 4; ++j) {
      const Matrix Aj = (0.3 * j) * Matrix::Identity(4, 4) + (1.0 - 0.2 * j) * J;
      for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i) comps[(k * 4 + i) * 4 + j] = Aj(k, i);
    }
    const ConnectionForm A(4, comps);
    const ConnectionForm CA = chern_connection(A, J);
    for (int j = 0; j < 4; ++j) CHECK(oracle::max_diff(CA.along_basis(j), A.along_basis(j)) <= 1e-15);
  }

  TEST_CASE("two-step algebras are Chern-Ricci flat") {
    Rng rng(28);
    for (const std::string name : {"kodaira_thurston", "heisenberg_sum"})
      for (int s = 0; s < 100; ++s) {
        const Built b = build(random_catalog_structure(name, rng));
        REQUIRE(b.cr.P.max_abs() <= 1e-12);
        REQUIRE(chern_ricci_adjoint(b.S.algebra, b.S.J).max_abs() <= 1e-12);
      }
  }

  TEST_CASE("n4 Chern-Ricci form and the two formulas") {
    Rng rng(29);
    for (int s = 0; s < 100; ++s) {
      const N4FamilyParams p = random_n4_params(rng);
      const Built b = build(n4_family(p));
      REQUIRE(oracle::max_diff(b.cr.P.matrix(), TwoForm::wedge(4, 0, 1, p.cp).matrix()) <= 1e-11);
      REQUIRE((b.cr.P - chern_ricci_adjoint(b.S.algebra, b.S.J)).max_abs() <= 1e-11);
      REQUIRE(ce_d2(b.S.algebra, b.cr.P).max_abs() <= 1e-10);
    }
    for (const auto& name : list_entries()) {
      const Built b = build(make_entry(name).initial_structure());
      CHECK((b.cr.P - chern_ricci_adjoint(b.S.algebra, b.S.J)).max_abs() <= 1e-11);
      CHECK(ce_d2(b.S.algebra, b.cr.P).max_abs() <= 1e-10);
    }
  }

  TEST_CASE("Ricci anti-invariant part identity") {
    Rng rng(30);
    for (const auto& name : list_entries())
      for (int s = 0; s < 20; ++s) {
        const Built b = build(random_catalog_structure(name, rng));
        const Matrix lhs = 2.0 * raise(b.cr.g, anti_invariant_part(b.cr.ric.form, b.S.J));
        const Matrix rhs = b.S.J * commutator_anti_part(b.cr.Rc, b.S.J);
        REQUIRE(oracle::max_diff(lhs, rhs) <= 1e-10 * (1 + rhs.cwiseAbs().maxCoeff()));
      }
  }

  TEST_CASE("Nijenhuis tensor of the Kodaira-Thurston structure") {
    const LieAlgebra L = kodaira_thurston_algebra();
    const Matrix J = kodaira_thurston(1, 1).initial_structure().J;
    const NijenhuisTensor N = nijenhuis(L, J);
    auto formula = [&](const Vector& x, const Vector& y) {
      return Vector(oracle::br(L, J * x, J * y) - J * oracle::br(L, J * x, y) - J * oracle::br(L, x, J * y) -
                    oracle::br(L, x, y));
    };
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(oracle::max_diff(N.at(i, j), formula(e(4, i), e(4, j))) <= 1e-15);
    CHECK(oracle::max_diff(N.at(0, 1), -e(4, 2)) == 0.0);
    CHECK(oracle::max_diff(N.at(0, 3), e(4, 0)) == 0.0);
    CHECK(oracle::max_diff(N.at(1, 2), e(4, 0)) == 0.0);
    CHECK(oracle::max_diff(N.at(2, 3), -e(4, 2)) == 0.0);
    CHECK(N.at(0, 2).cwiseAbs().maxCoeff() == 0.0);
    CHECK(N.at(1, 3).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("n4 Nijenhuis tensor against the displayed matrix") {
    // Display entry (i, j) is N(e_j, e_i).
    for (double t : {0.0, 0.3, 2.0, 10.0}) {
      const double y = oracle::n4_y(t);
      const Built b = build(n4_family(N4FamilyParams::analytic(t)));
      const NijenhuisTensor N = nijenhuis(b.S.algebra, b.S.J);
      const Vector u = e(4, 1) + e(4, 2), v = e(4, 0) - e(4, 3);
      const double p4 = std::pow(y, -4), p6 = std::pow(y, -6), p2 = std::pow(y, -2);
      std::vector<std::vector<Vector>> display(4, std::vector<Vector>(4, Vector::Zero(4)));
      display[0][1] = (2 * p4 - p6) * u;
      display[0][2] = -(p4 - p6) * u;
      display[0][3] = p4 * v;
      display[1][2] = -p2 * v;
      display[1][3] = -(p4 - p6) * u;
      display[2][3] = -p6 * u;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) display[j][i] = -display[i][j];
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(oracle::max_diff(N.at(j, i), display[i][j]) <= 1e-12);
    }
  }

  TEST_CASE("Nijenhuis symmetries") {
    Rng rng(31);
    for (const auto& name : list_entries())
      for (int s = 0; s < 10; ++s) {
        const AlmostKahlerStructure S = random_catalog_structure(name, rng);
        const NijenhuisTensor N = nijenhuis(S.algebra, S.J);
        const int n = S.algebra.dim();
        for (int i = 0; i < n; ++i) REQUIRE(N.at(i, i).cwiseAbs().maxCoeff() == 0.0);
        const Vector x = random_vector(n, rng), y = random_vector(n, rng);
        REQUIRE(oracle::max_diff(N.apply(x, x), Vector::Zero(n)) <= 1e-14);  // roundoff of the bilinear sum
        REQUIRE(oracle::max_diff(N.apply(S.J * x, y), -S.J * N.apply(x, y)) <= 1e-10);
      }
  }

  TEST_CASE("norms on the Kodaira-Thurston family") {
    const Built unit = build(kodaira_thurston(1, 1).initial_structure());
    CHECK(norm_nijenhuis(unit.cr.g, nijenhuis(unit.S.algebra, unit.S.J)) == doctest::Approx(8.0).epsilon(1e-13));
    CHECK(norm_riemann(unit.cr.g, unit.cr.R) == doctest::Approx(2.75).epsilon(1e-13));
    for (auto [a, bb] : {std::pair{0.6, 1.9}, {2.2, 0.35}}) {
      const Built b = build(kodaira_thurston(a, bb).initial_structure());
      CHECK(rel(norm_nijenhuis(b.cr.g, nijenhuis(b.S.algebra, b.S.J)), 8 * a * a * bb) <= 1e-12);
      CHECK(rel(norm_riemann(b.cr.g, b.cr.R), 2.75 * std::pow(a, 4) * bb * bb) <= 1e-12);
    }
  }

  TEST_CASE("norms on the Heisenberg sum family") {
    for (auto [a, bb, c] : {std::tuple{1.0, 1.0, 1.0}, {1.0, 2.0, 3.0}, {0.4, 0.7, 1.6}}) {
      const Built b = build(heisenberg_sum(a, bb, c).initial_structure());
      CHECK(rel(norm_nijenhuis(b.cr.g, nijenhuis(b.S.algebra, b.S.J)), 8 * (a * a * bb + c * c / bb)) <= 1e-12);
      CHECK(rel(norm_riemann(b.cr.g, b.cr.R), 2.75 * (std::pow(a, 4) * bb * bb + std::pow(c, 4) / (bb * bb))) <= 1e-12);
    }
  }

  TEST_CASE("norms do not depend on the orthonormal frame") {
    Rng rng(32);
    for (const auto& name : list_entries()) {
      const Built b = build(random_catalog_structure(name, rng));
      const int n = b.S.algebra.dim();
      Eigen::SelfAdjointEigenSolver<Matrix> es(b.cr.g.matrix());
      const Matrix F = es.eigenvectors() * es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal();
      const NijenhuisTensor N = nijenhuis(b.S.algebra, b.S.J);
      double nn = 0, rr = 0;
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
          const Vector v = N.apply(F.col(a), F.col(c));
          nn += v.dot(b.cr.g.matrix() * v);
          Matrix Rac = Matrix::Zero(n, n);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) Rac += F(i, a) * F(j, c) * b.cr.R.at(i, j);
          const Matrix Rf = F.transpose() * b.cr.g.matrix() * Rac * F;
          rr += Rf.squaredNorm();
        }
      CHECK(rel(norm_nijenhuis(b.cr.g, N), nn) <= 1e-11);
      CHECK(rel(norm_riemann(b.cr.g, b.cr.R), kRiemannNormCalibration * rr) <= 1e-11);
    }
  }
}
