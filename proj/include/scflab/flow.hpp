#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scflab/curvature.hpp"

namespace scf {

using NamedValues = std::vector<std::pair<std::string, double>>;

struct FlowState {
  double t = 0;
  TwoForm omega;
  Endomorphism J;
};

struct IntegratorConfig {
  double t_end = 1.0;
  double dt = 1e-3;
  double drift_tol = 1e-6;
  bool renormalize_J = false;
  int record_every = 1;

  /// Throws InputError for dt <= 0, dt >= t_end - t_start, drift_tol <= 0
  /// or record_every < 1.
  void validate(double t_start) const;
};

struct FlowDiagnostics {
  double drift_Jsq = 0;
  double drift_compat = 0;
  double drift_closed = 0;
  double min_eig_g = 0;
  double norm_N_sq = 0;
  double norm_R_sq = 0;
  NamedValues conserved;
};

enum class Termination { ReachedEnd, DriftExceeded, MetricDegenerated };

std::string to_string(Termination reason);

struct Trajectory {
  std::vector<std::pair<FlowState, FlowDiagnostics>> records;
  Termination reason = Termination::ReachedEnd;

  const FlowState& final_state() const { return records.back().first; }
};

struct FlowRhs {
  TwoForm d_omega;
  Endomorphism d_J;
};

/// d omega = -2P, dJ = -2 g^-1 P^anti + [Rc, J] with g = metric_of(omega, J).
/// Throws DegenerateMetric when g is not positive definite.
FlowRhs scf_rhs(const LieAlgebra& L, const TwoForm& omega, const Endomorphism& J);

/// -Ric + Ric(J., J.), the metric velocity when P = 0. Throws InputError
/// ("not Chern-Ricci flat") when |P| exceeds 1e-10.
Matrix metric_rhs_flat_case(const LieAlgebra& L, const TwoForm& omega, const Endomorphism& J);

/// J (-J^2)^{-1/2}, which restores J^2 = -I.
Endomorphism renormalize_complex_structure(const Endomorphism& J);

/// One classical RK4 step on (omega, J).
FlowState step_rk4(const LieAlgebra& L, const FlowState& state, double dt, bool renormalize_J = false);

using ConservedFn = std::function<NamedValues(const FlowState&)>;

FlowDiagnostics diagnose(const LieAlgebra& L, const FlowState& state, const ConservedFn& conserved = {});

/// Fixed-step RK4 from `initial` to cfg.t_end. Records the initial state,
/// every `record_every` steps, and the last state. Stops early when a drift
/// exceeds cfg.drift_tol or when the metric degenerates (min eigenvalue below
/// 1e-10 or a component above 1e12).
Trajectory integrate(const LieAlgebra& L, const FlowState& initial, const IntegratorConfig& cfg,
                     const ConservedFn& conserved = {});

struct CatalogEntry;

/// Conserved quantities of `entry` at `state`. Throws InputError when the
/// state is further than `tol` from the entry's family.
NamedValues conserved_report(const CatalogEntry& entry, const FlowState& state, double tol = 1e-6);

enum class StaticBehaviour { Expand, Static, Collapse };

std::string to_string(StaticBehaviour b);

struct StaticPrediction {
  double lambda;  // pi (2 - n) / 2
  double scale;   // (1 + lambda t) * omega0_scale
  StaticBehaviour behaviour;
  std::optional<double> extinction_time;  // -1 / lambda when n > 2
};

/// Scale of omega(t) for the static twistor solutions, d_t omega = lambda omega(0).
StaticPrediction static_flow_predictor(int n, double omega0_scale, double t);

}  // namespace scf
