#include "scflab/flow.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "scflab/catalog.hpp"
#include "scflab/errors.hpp"

namespace scf {

namespace {

constexpr double kMinMetricEigenvalue = 1e-10;
constexpr double kBlowUpComponent = 1e12;
constexpr double kFlatTolerance = 1e-10;

}  // namespace

void IntegratorConfig::validate(double t_start) const {
  if (!(dt > 0)) throw InputError("dt must be positive");
  if (!(dt < t_end - t_start)) throw InputError("dt must be smaller than t_end - t_start");
  if (!(drift_tol > 0)) throw InputError("drift_tol must be positive");
  if (record_every < 1) throw InputError("record_every must be at least 1");
}

std::string to_string(Termination reason) {
  switch (reason) {
    case Termination::ReachedEnd:
      return "reached_t_end";
    case Termination::DriftExceeded:
      return "drift_exceeded";
    case Termination::MetricDegenerated:
      return "metric_degenerated";
  }
  return "unknown";
}

FlowRhs scf_rhs(const LieAlgebra& L, const TwoForm& omega, const Endomorphism& J) {
  const CurvatureReport cr = curvature_of(L, omega, J);
  const TwoForm p_anti = anti_invariant_part(cr.P, J);
  Endomorphism dJ = -2.0 * raise(cr.g, p_anti) + commutator_anti_part(cr.Rc, J);
  return FlowRhs{cr.P * -2.0, std::move(dJ)};
}

Matrix metric_rhs_flat_case(const LieAlgebra& L, const TwoForm& omega, const Endomorphism& J) {
  const CurvatureReport cr = curvature_of(L, omega, J);
  if (cr.P.max_abs() > kFlatTolerance) {
    std::ostringstream os;
    os << "not Chern-Ricci flat (max |P| = " << cr.P.max_abs() << ")";
    throw InputError(os.str());
  }
  const Matrix& ric = cr.ric.form;
  return -ric + J.transpose() * ric * J;
}

Endomorphism renormalize_complex_structure(const Endomorphism& J) {
  const Matrix minus_sq = -(J * J);
  const Matrix root = minus_sq.sqrt();
  return J * root.inverse();
}

FlowState step_rk4(const LieAlgebra& L, const FlowState& state, double dt, bool renormalize_J) {
  if (!(dt > 0)) throw InputError("dt must be positive");
  const Matrix& w0 = state.omega.matrix();
  const Matrix& j0 = state.J;

  const FlowRhs k1 = scf_rhs(L, state.omega, j0);
  const FlowRhs k2 = scf_rhs(L, TwoForm(w0 + 0.5 * dt * k1.d_omega.matrix()), j0 + 0.5 * dt * k1.d_J);
  const FlowRhs k3 = scf_rhs(L, TwoForm(w0 + 0.5 * dt * k2.d_omega.matrix()), j0 + 0.5 * dt * k2.d_J);
  const FlowRhs k4 = scf_rhs(L, TwoForm(w0 + dt * k3.d_omega.matrix()), j0 + dt * k3.d_J);

  const Matrix dw = k1.d_omega.matrix() + 2.0 * k2.d_omega.matrix() + 2.0 * k3.d_omega.matrix() +
                    k4.d_omega.matrix();
  const Matrix dj = k1.d_J + 2.0 * k2.d_J + 2.0 * k3.d_J + k4.d_J;

  FlowState next{state.t + dt, TwoForm(w0 + (dt / 6.0) * dw), j0 + (dt / 6.0) * dj};
  if (renormalize_J) next.J = renormalize_complex_structure(next.J);
  return next;
}

namespace {

struct Drifts {
  double j_sq, compat, closed;
};

Drifts drifts_of(const LieAlgebra& L, const FlowState& s) {
  const int n = L.dim();
  return {(s.J * s.J + Matrix::Identity(n, n)).cwiseAbs().maxCoeff(),
          (s.J.transpose() * s.omega.matrix() * s.J - s.omega.matrix()).cwiseAbs().maxCoeff(),
          ce_d2(L, s.omega).max_abs()};
}

bool blown_up(const FlowState& s) {
  const auto big = [](const Matrix& m) { return !m.allFinite() || m.cwiseAbs().maxCoeff() > kBlowUpComponent; };
  return big(s.omega.matrix()) || big(s.J);
}

}  // namespace

FlowDiagnostics diagnose(const LieAlgebra& L, const FlowState& state, const ConservedFn& conserved) {
  FlowDiagnostics d;
  const Drifts dr = drifts_of(L, state);
  d.drift_Jsq = dr.j_sq;
  d.drift_compat = dr.compat;
  d.drift_closed = dr.closed;
  d.min_eig_g = min_symmetric_eigenvalue(state.omega.matrix() * state.J);
  try {
    const CurvatureReport cr = curvature_of(L, state.omega, state.J);
    d.norm_N_sq = norm_nijenhuis(cr.g, nijenhuis(L, state.J));
    d.norm_R_sq = norm_riemann(cr.g, cr.R);
  } catch (const DegenerateMetric&) {
    d.norm_N_sq = d.norm_R_sq = std::numeric_limits<double>::quiet_NaN();
  }
  if (conserved) d.conserved = conserved(state);
  return d;
}

Trajectory integrate(const LieAlgebra& L, const FlowState& initial, const IntegratorConfig& cfg,
                     const ConservedFn& conserved) {
  cfg.validate(initial.t);
  Trajectory traj;
  traj.records.emplace_back(initial, diagnose(L, initial, conserved));

  const double t0 = initial.t;
  const long steps = static_cast<long>(std::ceil((cfg.t_end - t0) / cfg.dt - 1e-9));
  FlowState state = initial;

  for (long s = 1; s <= steps; ++s) {
    const double t_next = (s == steps) ? cfg.t_end : t0 + static_cast<double>(s) * cfg.dt;
    FlowState next = state;
    try {
      next = step_rk4(L, state, t_next - state.t, cfg.renormalize_J);
    } catch (const DegenerateMetric&) {
      traj.reason = Termination::MetricDegenerated;
      break;
    }
    next.t = t_next;

    if (blown_up(next) || min_symmetric_eigenvalue(next.omega.matrix() * next.J) < kMinMetricEigenvalue) {
      traj.reason = Termination::MetricDegenerated;
      break;
    }
    state = std::move(next);

    const Drifts dr = drifts_of(L, state);
    if (dr.j_sq > cfg.drift_tol || dr.compat > cfg.drift_tol || dr.closed > cfg.drift_tol) {
      traj.reason = Termination::DriftExceeded;
      break;
    }
    if (s % cfg.record_every == 0 || s == steps) traj.records.emplace_back(state, diagnose(L, state, conserved));
  }
  // Keep the last accepted (or offending) state when the loop stopped early.
  if (state.t > traj.records.back().first.t) traj.records.emplace_back(state, diagnose(L, state, conserved));
  return traj;
}

NamedValues conserved_report(const CatalogEntry& entry, const FlowState& state, double tol) {
  const auto params = entry.project(state);
  if (!params) throw InputError("state is not in the " + entry.name + " family");
  AlmostKahlerStructure rebuilt = [&] {
    try {
      return entry.build(*params);
    } catch (const InputError& e) {
      throw InputError("state is not in the " + entry.name + " family: " + e.what());
    }
  }();
  const double residual = std::max((rebuilt.omega - state.omega).max_abs(),
                                   (rebuilt.J - state.J).cwiseAbs().maxCoeff());
  if (residual > tol) {
    std::ostringstream os;
    os << "state is " << residual << " away from the " << entry.name << " family";
    throw InputError(os.str());
  }
  NamedValues out;
  for (const auto& [name, fn] : entry.conserved) out.emplace_back(name, fn(*params));
  return out;
}

std::string to_string(StaticBehaviour b) {
  switch (b) {
    case StaticBehaviour::Expand:
      return "expand";
    case StaticBehaviour::Static:
      return "static";
    case StaticBehaviour::Collapse:
      return "collapse";
  }
  return "unknown";
}

StaticPrediction static_flow_predictor(int n, double omega0_scale, double t) {
  if (n < 1) throw InputError("static predictor needs n >= 1");
  StaticPrediction p;
  p.lambda = std::numbers::pi * (2 - n) / 2.0;
  p.scale = (1.0 + p.lambda * t) * omega0_scale;
  if (n == 1) {
    p.behaviour = StaticBehaviour::Expand;
  } else if (n == 2) {
    p.behaviour = StaticBehaviour::Static;
  } else {
    p.behaviour = StaticBehaviour::Collapse;
    p.extinction_time = -1.0 / p.lambda;
  }
  return p;
}

}  // namespace scf
