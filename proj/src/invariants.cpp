#include "scflab/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "scflab/curvature.hpp"
#include "scflab/errors.hpp"
#include "scflab/flow.hpp"
#include "scflab/sampling.hpp"

namespace scf {

namespace {

InvariantCheck make_check(std::string name, double value, double tol, std::string note = {}) {
  InvariantCheck c;
  c.name = std::move(name);
  c.value = value;
  c.tol = tol;
  c.passed = value <= tol;
  c.note = std::move(note);
  return c;
}

InvariantCheck skipped(std::string name, double tol, std::string note) {
  InvariantCheck c;
  c.name = std::move(name);
  c.tol = tol;
  c.skipped = true;
  c.passed = true;
  c.note = std::move(note);
  return c;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Largest (s+1)-fold nested bracket [e_i1, [e_i2, ... e_i(s+1)]] over all index tuples.
double nested_bracket_max(const LieAlgebra& L, int depth) {
  const int n = L.dim();
  std::vector<Vector> level;
  for (int i = 0; i < n; ++i) level.push_back(Vector::Unit(n, i));
  for (int d = 1; d < depth; ++d) {
    std::vector<Vector> next;
    next.reserve(level.size() * n);
    for (const auto& v : level)
      for (int i = 0; i < n; ++i) next.push_back(bracket(L, Vector::Unit(n, i), v));
    level = std::move(next);
  }
  double m = 0.0;
  for (const auto& v : level) m = std::max(m, v.cwiseAbs().maxCoeff());
  return m;
}

}  // namespace

std::vector<InvariantCheck> run_invariant_suite(const AlmostKahlerStructure& S, const InvariantSuiteOptions& opts) {
  std::vector<InvariantCheck> out;
  const LieAlgebra& L = S.algebra;
  const int n = L.dim();
  const Endomorphism& J = S.J;
  Rng rng(opts.seed);

  // lie_core
  out.push_back(make_check("jacobi_defect", jacobi_defect(L), 1e-12));
  {
    double worst = 0.0;
    for (int s = 0; s < opts.random_samples; ++s)
      worst = std::max(worst, ce_d2(L, ce_d1(L, random_one_form(n, rng))).max_abs());
    out.push_back(make_check("ce_d2_after_ce_d1_vanishes", worst, 1e-13));
  }
  {
    double worst = 0.0;
    for (int s = 0; s < opts.random_samples; ++s) {
      const Vector x = random_vector(n, rng), y = random_vector(n, rng);
      const Matrix ax = ad(L, x), ay = ad(L, y);
      worst = std::max(worst, max_abs(ad(L, bracket(L, x, y)) - (ax * ay - ay * ax)));
    }
    out.push_back(make_check("ad_is_homomorphism", worst, 1e-12));
  }
  const auto step = nilpotency_step(L);
  if (!step) {
    out.push_back(skipped("nilpotency_nested_brackets", 1e-12, "not nilpotent"));
  } else if (std::pow(static_cast<double>(n), *step + 1) > 2e5) {
    out.push_back(skipped("nilpotency_nested_brackets", 1e-12, "too many bracket tuples to enumerate"));
  } else {
    std::ostringstream note;
    note << *step << "-step";
    out.push_back(make_check("nilpotency_nested_brackets", nested_bracket_max(L, *step + 1), 1e-12, note.str()));
  }

  // ak_structure
  const StructureReport rep = check_structure(S, 1e-10);
  {
    const double worst = std::max({rep.j_squared, rep.compatibility, rep.closedness});
    std::string note;
    for (const auto& f : rep.failures()) note += (note.empty() ? "" : ", ") + f;
    InvariantCheck c = make_check("almost_kahler_structure", worst, 1e-10, note);
    c.passed = rep.passed();
    out.push_back(c);
  }
  out.push_back(make_check("metric_symmetric_before_symmetrization", rep.metric_asymmetry, 1e-13));
  if (!rep.metric_ok()) return out;  // nothing metric-dependent is meaningful

  {
    double anti_lin = 0.0, decomposition = 0.0, idempotent = 0.0, anticommute = 0.0;
    for (int s = 0; s < opts.random_samples; ++s) {
      const TwoForm B = random_two_form(n, rng);
      const TwoForm anti = anti_invariant_part(B, J);
      const TwoForm inv = invariant_part(B, J);
      anti_lin = std::max(anti_lin, max_abs(J.transpose() * anti.matrix() * J + anti.matrix()));
      decomposition = std::max(decomposition, (B - inv - anti).max_abs());
      idempotent = std::max(idempotent, (anti_invariant_part(anti, J) - anti).max_abs());
      const Matrix Rc = random_spd(n, rng);
      const Endomorphism comm = commutator_anti_part(Rc, J);
      anticommute = std::max(anticommute, max_abs(comm * J + J * comm));
    }
    out.push_back(make_check("anti_invariant_part_is_antilinear", anti_lin, 1e-12));
    out.push_back(make_check("invariant_plus_anti_invariant", decomposition, 1e-13));
    out.push_back(make_check("anti_invariant_part_idempotent", idempotent, 1e-12));
    out.push_back(make_check("commutator_anticommutes_with_J", anticommute, 1e-12));
  }

  // curvature
  const CurvatureReport cr = curvature_of(L, S.omega, J);
  const Matrix& g = cr.g.matrix();
  {
    double compat = 0.0, torsion = 0.0;
    for (int z = 0; z < n; ++z) {
      const Matrix Az = cr.A.along_basis(z);
      compat = std::max(compat, max_abs(Az.transpose() * g + g * Az));
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const Vector ex = Vector::Unit(n, x), ey = Vector::Unit(n, y);
        const Vector t = cr.A.along(ex) * ey - cr.A.along(ey) * ex - bracket(L, ex, ey);
        torsion = std::max(torsion, t.cwiseAbs().maxCoeff());
      }
    out.push_back(make_check("levi_civita_metric_compatible", compat, 1e-10));
    out.push_back(make_check("levi_civita_torsion_free", torsion, 1e-10));
  }
  out.push_back(make_check("ricci_symmetric_before_symmetrization", cr.ric.asymmetry, 1e-9));
  const TwoForm P_adj = chern_ricci_adjoint(L, J);
  out.push_back(make_check("chern_ricci_formulas_agree", (cr.P - P_adj).max_abs(), 1e-11));
  out.push_back(make_check("chern_ricci_closed", ce_d2(L, cr.P).max_abs(), 1e-10));
  if (step && *step <= 2) {
    out.push_back(make_check("two_step_chern_ricci_flat", cr.P.max_abs(), 1e-12));
  } else {
    std::ostringstream note;
    note << "P != 0 allowed (" << (step ? std::to_string(*step) + "-step" : "not nilpotent")
         << "), max |P| = " << cr.P.max_abs();
    out.push_back(skipped("two_step_chern_ricci_flat", 1e-12, note.str()));
  }
  {
    const Matrix lhs = 2.0 * raise(cr.g, anti_invariant_part(cr.ric.form, J));
    const Matrix rhs = J * commutator_anti_part(cr.Rc, J);
    out.push_back(make_check("ricci_anti_part_identity", max_abs(lhs - rhs), 1e-10));
  }
  {
    const NijenhuisTensor N = nijenhuis(L, J);
    double diag = 0.0, anti = 0.0;
    for (int i = 0; i < n; ++i) {
      diag = std::max(diag, N.at(i, i).cwiseAbs().maxCoeff());
      for (int j = 0; j < n; ++j) {
        const Vector ei = Vector::Unit(n, i), ej = Vector::Unit(n, j);
        anti = std::max(anti, (N.apply(J * ei, ej) + J * N.apply(ei, ej)).cwiseAbs().maxCoeff());
      }
    }
    out.push_back(make_check("nijenhuis_vanishes_on_diagonal", diag, 0.0));
    out.push_back(make_check("nijenhuis_is_antilinear", anti, 1e-10));
  }
  {
    const ConnectionForm C = chern_connection(cr.A, J);
    double worst = 0.0;
    for (int z = 0; z < n; ++z) {
      const Matrix Cz = C.along_basis(z);
      worst = std::max(worst, max_abs(Cz * J - J * Cz));
    }
    out.push_back(make_check("chern_connection_commutes_with_J", worst, 1e-10));
  }

  // flow
  if (!rep.passed()) {
    out.push_back(skipped("flow_preserves_almost_kahler", 1e-7, "initial structure invalid"));
    return out;
  }
  {
    IntegratorConfig cfg;
    cfg.t_end = opts.flow_t_end;
    cfg.dt = opts.flow_dt;
    cfg.drift_tol = 1.0;
    cfg.record_every = 10;
    const FlowState initial{0.0, S.omega, S.J};
    const Trajectory traj = integrate(L, initial, cfg);
    double drift = 0.0, closed = 0.0;
    for (const auto& [state, diag] : traj.records) {
      drift = std::max({drift, diag.drift_Jsq, diag.drift_compat, diag.drift_closed});
      closed = std::max(closed, diag.drift_closed);
    }
    InvariantCheck c = make_check("flow_preserves_almost_kahler", drift, 1e-7, to_string(traj.reason));
    c.passed = c.passed && traj.reason == Termination::ReachedEnd;
    out.push_back(c);
    out.push_back(make_check("flow_omega_stays_closed", closed, 1e-9));

    if (step && *step <= 2) {
      const double h = opts.flow_dt;
      const FlowState s1 = step_rk4(L, initial, h);
      const FlowState s2 = step_rk4(L, s1, h);
      const Matrix fd = (-3.0 * g + 4.0 * metric_of(s1.omega, s1.J).matrix() - metric_of(s2.omega, s2.J).matrix()) /
                        (2.0 * h);
      const Matrix rhs = metric_rhs_flat_case(L, S.omega, J);
      const double scale = std::max(1.0, max_abs(rhs));
      out.push_back(make_check("flat_case_metric_velocity", max_abs(fd - rhs) / scale, 1e-5));
    } else {
      out.push_back(skipped("flat_case_metric_velocity", 1e-5, "P != 0, flat-case equation does not apply"));
    }
  }
  return out;
}

bool all_passed(const std::vector<InvariantCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.skipped || c.passed; });
}

}  // namespace scf
