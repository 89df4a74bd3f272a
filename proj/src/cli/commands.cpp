#include "scflab/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>

#include <CLI11.hpp>

#include "scflab/cli/timeseries.hpp"
#include "scflab/invariants.hpp"

namespace scf::cli {

using nlohmann::json;

namespace {

json to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Vector& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json state_json(const FlowState& s) { return {{"t", s.t}, {"omega", to_json(s.omega.matrix())}, {"J", to_json(s.J)}}; }

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// Rejects structures that fail the almost Kahler checks, naming the failures.
bool validate_structure(const AlmostKahlerStructure& S, std::ostream& err) {
  const StructureReport rep = check_structure(S, 1e-10);
  if (rep.passed()) return true;
  err << "error: source is not an almost Kahler structure:";
  for (const auto& f : rep.failures()) err << " [" << f << "]";
  err << '\n';
  return false;
}

ConservedFn conserved_fn(const std::optional<CatalogEntry>& entry) {
  if (!entry || entry->conserved.empty()) return {};
  const CatalogEntry e = *entry;
  return [e](const FlowState& s) {
    try {
      return conserved_report(e, s);
    } catch (const InputError&) {
      NamedValues nan;
      for (const auto& [name, fn] : e.conserved) nan.emplace_back(name, std::numeric_limits<double>::quiet_NaN());
      return nan;
    }
  };
}

}  // namespace

int cmd_list(std::ostream& out) {
  for (const auto& name : list_entries()) {
    const CatalogEntry e = make_entry(name);
    json flags = json::array();
    if (name != "n4")
      for (const auto& p : e.param_names) flags.push_back(p);
    json defaults = json::object();
    for (const auto& [k, v] : e.initial_params) defaults[k] = v;
    json conserved = json::array();
    for (const auto& [cname, fn] : e.conserved) conserved.push_back(cname);
    out << json{{"name", name},
                {"dim", e.algebra.dim()},
                {"params", e.param_names},
                {"flags", flags},
                {"defaults", defaults},
                {"analytic", e.analytic(0.0).has_value()},
                {"conserved", conserved}}
               .dump()
        << '\n';
  }
  return kOk;
}

int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ResolvedSource src = resolve_source(cfg);
  const AlmostKahlerStructure& S = src.structure;
  if (!validate_structure(S, err)) return kBadConfig;
  const LieAlgebra& L = S.algebra;
  const int n = L.dim();

  const StructureReport rep = check_structure(S, 1e-10);
  const CurvatureReport cr = curvature_of(L, S.omega, S.J);
  const TwoForm P_adj = chern_ricci_adjoint(L, S.J);
  const NijenhuisTensor N = nijenhuis(L, S.J);
  const auto step = nilpotency_step(L);
  const auto primitive = exact_primitive(L, cr.P);

  json connection = json::array();
  for (int j = 0; j < n; ++j) connection.push_back(to_json(cr.A.along_basis(j)));
  json nij = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(to_json(N.at(i, j)));
    nij.push_back(std::move(row));
  }

  json doc{
      {"source", src.label},
      {"dim", n},
      {"jacobi_defect", jacobi_defect(L)},
      {"nilpotency_step", step ? json(*step) : json(nullptr)},
      {"structure",
       {{"J_sq", rep.j_squared},
        {"compat", rep.compatibility},
        {"closed", rep.closedness},
        {"min_eig_g", rep.min_eig_g},
        {"metric_asymmetry", rep.metric_asymmetry},
        {"passed", rep.passed()}}},
      {"metric", to_json(cr.g.matrix())},
      {"connection", connection},
      {"ricci", to_json(cr.ric.form)},
      {"ricci_asymmetry", cr.ric.asymmetry},
      {"ricci_endomorphism", to_json(cr.Rc)},
      {"chern_ricci_trace", to_json(cr.P.matrix())},
      {"chern_ricci_adjoint", to_json(P_adj.matrix())},
      {"chern_ricci_discrepancy", (cr.P - P_adj).max_abs()},
      {"nijenhuis", nij},
      {"norm_N_sq", norm_nijenhuis(cr.g, N)},
      {"norm_R_sq", norm_riemann(cr.g, cr.R)},
      {"chern_ricci_primitive", primitive ? to_json(primitive->components()) : json(nullptr)},
  };
  out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_flow(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ResolvedSource src = resolve_source(cfg);
  const AlmostKahlerStructure& S = src.structure;
  cfg.flow.validate(0.0);
  if (!validate_structure(S, err)) return kBadConfig;

  const FlowState initial{0.0, S.omega, S.J};
  const Trajectory traj = integrate(S.algebra, initial, cfg.flow, conserved_fn(src.entry));

  std::vector<std::string> conserved_names;
  if (src.entry)
    for (const auto& [name, fn] : src.entry->conserved) conserved_names.push_back(name);
  const auto columns = column_names(S.algebra.dim(), conserved_names);
  const bool jsonl = cfg.format == OutputFormat::JsonLines;

  std::ofstream file;
  if (cfg.out_path) {
    file.open(*cfg.out_path);
    if (!file) throw ConfigError("output.path: cannot open '" + *cfg.out_path + "'");
  }
  std::ostream& series = cfg.out_path ? static_cast<std::ostream&>(file) : out;
  TimeSeriesWriter writer(series, jsonl, columns);
  for (const auto& [state, diag] : traj.records) writer.write(state, diag);
  series.flush();

  double max_jsq = 0, max_compat = 0, max_closed = 0;
  for (const auto& [state, diag] : traj.records) {
    max_jsq = std::max(max_jsq, diag.drift_Jsq);
    max_compat = std::max(max_compat, diag.drift_compat);
    max_closed = std::max(max_closed, diag.drift_closed);
  }
  json summary{{"summary", true},
               {"source", src.label},
               {"termination", to_string(traj.reason)},
               {"records", traj.records.size()},
               {"final_state", state_json(traj.final_state())},
               {"max_drift", {{"J_sq", max_jsq}, {"compat", max_compat}, {"closed", max_closed}}}};
  if (src.entry && src.entry->analytic(0.0)) {
    double worst = 0.0;
    for (const auto& [state, diag] : traj.records) {
      const FlowState exact = *src.entry->analytic(state.t);
      const double scale = std::max(exact.omega.max_abs(), exact.J.cwiseAbs().maxCoeff());
      const double diff = std::max((state.omega - exact.omega).max_abs(), (state.J - exact.J).cwiseAbs().maxCoeff());
      worst = std::max(worst, diff / scale);
    }
    summary["max_rel_err_vs_analytic"] = number_or_null(worst);
  }
  (cfg.out_path ? out : err) << summary.dump() << '\n';

  switch (traj.reason) {
    case Termination::ReachedEnd:
      return kOk;
    case Termination::DriftExceeded:
      return kDriftExceeded;
    case Termination::MetricDegenerated:
      return kMetricDegenerated;
  }
  return kOk;
}

int cmd_check(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  const ResolvedSource src = resolve_source(cfg);
  InvariantSuiteOptions opts;
  opts.seed = seed;
  const auto checks = run_invariant_suite(src.structure, opts);
  for (const auto& c : checks) {
    json row{{"check", c.name},
             {"status", c.skipped ? "skipped" : (c.passed ? "pass" : "fail")},
             {"value", number_or_null(c.value)},
             {"tol", c.tol}};
    if (!c.note.empty()) row["note"] = c.note;
    out << row.dump() << '\n';
  }
  const bool ok = all_passed(checks);
  out << json{{"summary", true}, {"source", src.label}, {"all_passed", ok}, {"seed", seed}}.dump() << '\n';
  if (!ok) err << "error: invariant checks failed\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_static(int n, std::ostream& out, std::ostream& /*err*/) {
  const StaticPrediction p = static_flow_predictor(n, 1.0, 0.0);
  out << json{{"n", n},
              {"lambda", p.lambda},
              {"behaviour", to_string(p.behaviour)},
              {"extinction_time", p.extinction_time ? json(*p.extinction_time) : json(nullptr)}}
             .dump()
      << '\n';
  return kOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic curvature flow on left-invariant almost Kahler structures"};
  app.require_subcommand(1);

  struct Flags {
    std::string example, config, out_path, format;
    std::optional<double> alpha, beta, gamma, t_end, dt, drift_tol;
    std::optional<int> record_every;
    bool renormalize = false;
  } f;

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--example", f.example, "catalog entry (kodaira_thurston | heisenberg_sum | n4)");
    sub->add_option("--config", f.config, "JSON config file");
    sub->add_option("--alpha", f.alpha, "family parameter alpha (default 1)");
    sub->add_option("--beta", f.beta, "family parameter beta (default 1)");
    sub->add_option("--gamma", f.gamma, "family parameter gamma (default 1)");
  };

  CLI::App* list = app.add_subcommand("list", "list catalog entries");
  CLI::App* report = app.add_subcommand("report", "curvature report at t = 0");
  add_source(report);
  CLI::App* flow = app.add_subcommand("flow", "integrate the flow and write a time series");
  add_source(flow);
  flow->add_option("--t-end", f.t_end, "end time (default 1)");
  flow->add_option("--dt", f.dt, "RK4 step (default 1e-3)");
  flow->add_option("--record-every", f.record_every, "record every k steps (default 100)");
  flow->add_flag("--renormalize-j", f.renormalize, "restore J^2 = -I after every step");
  flow->add_option("--drift-tol", f.drift_tol, "abort when a constraint drifts past this (default 1e-6)");
  flow->add_option("--out", f.out_path, "time series file (default stdout)");
  flow->add_option("--format", f.format, "csv | jsonl");
  CLI::App* check = app.add_subcommand("check", "run the invariant suite");
  add_source(check);
  CLI::App* stat = app.add_subcommand("static", "static twistor solution scaling");
  int static_n = 0;
  stat->add_option("n", static_n, "half the real dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadConfig;
  }

  try {
    if (*list) return cmd_list(out);
    if (*stat) return cmd_static(static_n, out, err);

    RunConfig cfg = f.config.empty() ? RunConfig{} : load_config_file(f.config);
    if (!f.example.empty()) {
      cfg.example = f.example;
      cfg.structure.reset();
    }
    if (f.alpha) cfg.params["alpha"] = *f.alpha;
    if (f.beta) cfg.params["beta"] = *f.beta;
    if (f.gamma) cfg.params["gamma"] = *f.gamma;
    if (f.t_end) cfg.flow.t_end = *f.t_end;
    if (f.dt) cfg.flow.dt = *f.dt;
    if (f.drift_tol) cfg.flow.drift_tol = *f.drift_tol;
    if (f.record_every) cfg.flow.record_every = *f.record_every;
    if (f.renormalize) cfg.flow.renormalize_J = true;
    if (!f.out_path.empty()) cfg.out_path = f.out_path;
    if (!f.format.empty()) cfg.format = parse_format(f.format);

    if (*report) return cmd_report(cfg, out, err);
    if (*flow) return cmd_flow(cfg, out, err);
    if (*check) {
      std::uint64_t seed = 0;
      if (const char* env = std::getenv("SCFLAB_SEED"); env && *env) {
        try {
          std::size_t used = 0;
          seed = std::stoull(env, &used);
          if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::exception&) {
          throw ConfigError(std::string("SCFLAB_SEED: not an unsigned integer: '") + env + "'");
        }
      }
      return cmd_check(cfg, seed, out, err);
    }
  } catch (const JacobiError& e) {
    err << "error: " << e.what() << '\n';
    return kBadConfig;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadConfig;
  } catch (const DegenerateMetric& e) {
    err << "error: " << e.what() << '\n';
    return kMetricDegenerated;
  }
  return kBadConfig;
}

}  // namespace scf::cli
