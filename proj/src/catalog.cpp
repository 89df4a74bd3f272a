#include "scflab/catalog.hpp"

#include <cmath>
#include <sstream>

#include "scflab/errors.hpp"

namespace scf {

namespace {

double param(const Params& p, const std::string& key) {
  const auto it = p.find(key);
  if (it == p.end()) throw InputError("missing family parameter '" + key + "'");
  return it->second;
}

void require_positive(const Params& p, const std::vector<std::string>& keys) {
  for (const auto& k : keys)
    if (!(param(p, k) > 0)) throw InputError("parameter '" + k + "' must be positive");
}

// Entries of J off `support` must vanish (up to roundoff) for a state to have
// the family's shape.
bool zero_outside(const Endomorphism& J, const std::vector<std::pair<int, int>>& support) {
  constexpr double kShapeTolerance = 1e-8;
  Matrix mask = Matrix::Zero(J.rows(), J.cols());
  for (const auto& [i, j] : support) mask(i, j) = 1.0;
  for (int i = 0; i < J.rows(); ++i)
    for (int j = 0; j < J.cols(); ++j)
      if (mask(i, j) == 0.0 && std::abs(J(i, j)) > kShapeTolerance) return false;
  return true;
}

}  // namespace

FlowState CatalogEntry::initial_state() const {
  const AlmostKahlerStructure s = initial_structure();
  return FlowState{0.0, s.omega, s.J};
}

LieAlgebra heisenberg3() { return LieAlgebra::from_brackets(3, {{1, 2, 3, 1.0}}); }

LieAlgebra kodaira_thurston_algebra() { return LieAlgebra::from_brackets(4, {{1, 2, 3, 1.0}}); }

LieAlgebra heisenberg_sum_algebra() { return LieAlgebra::from_brackets(6, {{1, 2, 5, 1.0}, {3, 4, 6, 1.0}}); }

LieAlgebra n4_algebra() { return LieAlgebra::from_brackets(4, {{1, 2, 3, 1.0}, {2, 3, 4, 1.0}}); }

CatalogEntry kodaira_thurston(double alpha0, double beta0) {
  if (!(alpha0 > 0) || !(beta0 > 0)) throw InputError("kodaira_thurston needs alpha, beta > 0");
  CatalogEntry e{.name = "kodaira_thurston",
                 .algebra = kodaira_thurston_algebra(),
                 .param_names = {"alpha", "beta"},
                 .initial_params = {{"alpha", alpha0}, {"beta", beta0}}};
  const LieAlgebra L = e.algebra;
  e.build = [L](const Params& p) {
    require_positive(p, {"alpha", "beta"});
    const double a = param(p, "alpha"), b = param(p, "beta");
    const TwoForm omega = TwoForm::wedge(4, 0, 2) + TwoForm::wedge(4, 1, 3, -1.0);
    Endomorphism J = Matrix::Zero(4, 4);
    J(0, 2) = -a;
    J(1, 3) = b;
    J(2, 0) = 1.0 / a;
    J(3, 1) = -1.0 / b;
    return AlmostKahlerStructure{L, omega, J};
  };
  e.project = [](const FlowState& s) -> std::optional<Params> {
    if (s.J.rows() != 4 || !zero_outside(s.J, {{0, 2}, {1, 3}, {2, 0}, {3, 1}})) return std::nullopt;
    return Params{{"alpha", -s.J(0, 2)}, {"beta", s.J(1, 3)}};
  };
  e.analytic = [alpha0, beta0, build = e.build](double t) -> std::optional<FlowState> {
    const double base = 1.0 + 2.5 * alpha0 * alpha0 * beta0 * t;
    const Params p{{"alpha", alpha0 * std::pow(base, -0.4)}, {"beta", beta0 * std::pow(base, -0.2)}};
    const AlmostKahlerStructure s = build(p);
    return FlowState{t, s.omega, s.J};
  };
  e.conserved = {{"alpha^(-2/3)*beta^(4/3)", [](const Params& p) {
                    return std::pow(param(p, "alpha"), -2.0 / 3.0) * std::pow(param(p, "beta"), 4.0 / 3.0);
                  }}};
  return e;
}

CatalogEntry heisenberg_sum(double alpha0, double beta0, double gamma0) {
  if (!(alpha0 > 0) || !(beta0 > 0) || !(gamma0 > 0))
    throw InputError("heisenberg_sum needs alpha, beta, gamma > 0");
  CatalogEntry e{.name = "heisenberg_sum",
                 .algebra = heisenberg_sum_algebra(),
                 .param_names = {"alpha", "beta", "gamma"},
                 .initial_params = {{"alpha", alpha0}, {"beta", beta0}, {"gamma", gamma0}}};
  const LieAlgebra L = e.algebra;
  e.build = [L](const Params& p) {
    require_positive(p, {"alpha", "beta", "gamma"});
    const double a = param(p, "alpha"), b = param(p, "beta"), g = param(p, "gamma");
    const TwoForm omega = TwoForm::wedge(6, 0, 4) + TwoForm::wedge(6, 1, 3) + TwoForm::wedge(6, 2, 5);
    Endomorphism J = Matrix::Zero(6, 6);
    J(0, 4) = -a;
    J(1, 3) = -b;
    J(2, 5) = -g;
    J(3, 1) = 1.0 / b;
    J(4, 0) = 1.0 / a;
    J(5, 2) = 1.0 / g;
    return AlmostKahlerStructure{L, omega, J};
  };
  e.project = [](const FlowState& s) -> std::optional<Params> {
    if (s.J.rows() != 6 || !zero_outside(s.J, {{0, 4}, {1, 3}, {2, 5}, {3, 1}, {4, 0}, {5, 2}}))
      return std::nullopt;
    return Params{{"alpha", -s.J(0, 4)}, {"beta", -s.J(1, 3)}, {"gamma", -s.J(2, 5)}};
  };
  const bool easy = std::abs(beta0 - gamma0 / alpha0) <= 1e-12 * std::max(1.0, beta0);
  e.analytic = [easy, alpha0, beta0, gamma0, build = e.build](double t) -> std::optional<FlowState> {
    if (!easy) return std::nullopt;
    const double f = std::pow(1.0 + 2.0 * alpha0 * gamma0 * t, -0.5);
    const AlmostKahlerStructure s = build({{"alpha", alpha0 * f}, {"beta", beta0}, {"gamma", gamma0 * f}});
    return FlowState{t, s.omega, s.J};
  };
  const double ell = beta0 * std::sqrt(gamma0 / alpha0);
  e.conserved = {
      {"beta^2*gamma/alpha",
       [](const Params& p) { return param(p, "beta") * param(p, "beta") * param(p, "gamma") / param(p, "alpha"); }},
      {"xi-eta", [ell](const Params& p) {
         return std::pow(param(p, "alpha"), -3.0) / ell - ell * std::pow(param(p, "gamma"), -3.0);
       }}};
  return e;
}

Endomorphism N4FamilyParams::J() const {
  Endomorphism m(4, 4);
  m << 0, ap, bp, 0,  //
      a, 0, 0, cp,    //
      b, 0, 0, dp,    //
      0, c, d, 0;
  return m;
}

N4FamilyParams N4FamilyParams::from_J(const Endomorphism& J) {
  N4FamilyParams p;
  p.ap = J(0, 1);
  p.bp = J(0, 2);
  p.a = J(1, 0);
  p.cp = J(1, 3);
  p.b = J(2, 0);
  p.dp = J(2, 3);
  p.c = J(3, 1);
  p.d = J(3, 2);
  return p;
}

N4FamilyParams N4FamilyParams::analytic(double t) {
  const double y = std::pow(1.0 + 2.5 * t, 0.2);
  const double yi = 1.0 / y, yi3 = yi * yi * yi;
  N4FamilyParams p;
  p.a = yi - yi3;
  p.b = 2.0 * yi - yi3;
  p.c = 2.0 * y - yi;
  p.d = -y + yi;
  p.ap = -y + yi;
  p.bp = -yi;
  p.cp = -yi3;
  p.dp = yi - yi3;
  return p;
}

Params N4FamilyParams::to_params() const {
  return {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"a'", ap}, {"b'", bp}, {"c'", cp}, {"d'", dp}};
}

N4FamilyParams N4FamilyParams::from_params(const Params& p) {
  N4FamilyParams out;
  out.a = param(p, "a");
  out.b = param(p, "b");
  out.c = param(p, "c");
  out.d = param(p, "d");
  out.ap = param(p, "a'");
  out.bp = param(p, "b'");
  out.cp = param(p, "c'");
  out.dp = param(p, "d'");
  return out;
}

AlmostKahlerStructure n4_family(const N4FamilyParams& p, double tol) {
  const std::vector<std::pair<std::string, double>> relations = {
      {"aa'+bb' = -1", p.a * p.ap + p.b * p.bp + 1.0},  {"aa'+cc' = -1", p.a * p.ap + p.c * p.cp + 1.0},
      {"bb'+dd' = -1", p.b * p.bp + p.d * p.dp + 1.0},  {"cc'+dd' = -1", p.c * p.cp + p.d * p.dp + 1.0},
      {"ac+bd = 0", p.a * p.c + p.b * p.d},             {"a'c'+b'd' = 0", p.ap * p.cp + p.bp * p.dp},
      {"ab'+c'd = 0", p.a * p.bp + p.cp * p.d},         {"a'b+cd' = 0", p.ap * p.b + p.c * p.dp},
  };
  for (const auto& [name, residual] : relations)
    if (!(std::abs(residual) <= tol)) {
      std::ostringstream os;
      os << "n4 family constraint violated: " << name << " (residual " << residual << ")";
      throw InputError(os.str());
    }
  if (std::abs(p.bp) < 1e-12) throw InputError("n4 family needs b' != 0 to fix gamma");
  const TwoForm omega = TwoForm::wedge(4, 0, 2) + TwoForm::wedge(4, 1, 3) + TwoForm::wedge(4, 0, 1, p.gamma());
  return make_structure(n4_algebra(), omega, p.J(), tol);
}

CatalogEntry n4_entry() {
  const N4FamilyParams initial;
  CatalogEntry e{.name = "n4",
                 .algebra = n4_algebra(),
                 .param_names = {"a", "b", "c", "d", "a'", "b'", "c'", "d'"},
                 .initial_params = initial.to_params()};
  e.build = [](const Params& p) { return n4_family(N4FamilyParams::from_params(p)); };
  e.project = [](const FlowState& s) -> std::optional<Params> {
    if (s.J.rows() != 4 || !zero_outside(s.J, {{0, 1}, {0, 2}, {1, 0}, {1, 3}, {2, 0}, {2, 3}, {3, 1}, {3, 2}}))
      return std::nullopt;
    return N4FamilyParams::from_J(s.J).to_params();
  };
  e.analytic = [](double t) -> std::optional<FlowState> {
    const double y = std::pow(1.0 + 2.5 * t, 0.2);
    const TwoForm omega =
        TwoForm::wedge(4, 0, 2) + TwoForm::wedge(4, 1, 3) + TwoForm::wedge(4, 0, 1, 2.0 * (y * y - 1.0));
    return FlowState{t, omega, N4FamilyParams::analytic(t).J()};
  };
  return e;
}

std::vector<std::string> list_entries() { return {"kodaira_thurston", "heisenberg_sum", "n4"}; }

CatalogEntry make_entry(const std::string& name, const Params& params) {
  auto get = [&](const char* key) {
    const auto it = params.find(key);
    return it == params.end() ? 1.0 : it->second;
  };
  auto reject_unknown = [&](const std::vector<std::string>& allowed) {
    for (const auto& [k, v] : params) {
      bool ok = false;
      for (const auto& a : allowed) ok = ok || a == k;
      if (!ok) throw InputError("example '" + name + "' has no parameter '" + k + "'");
    }
  };
  if (name == "kodaira_thurston") {
    reject_unknown({"alpha", "beta"});
    return kodaira_thurston(get("alpha"), get("beta"));
  }
  if (name == "heisenberg_sum") {
    reject_unknown({"alpha", "beta", "gamma"});
    return heisenberg_sum(get("alpha"), get("beta"), get("gamma"));
  }
  if (name == "n4") {
    reject_unknown({});
    return n4_entry();
  }
  throw InputError("unknown example '" + name + "' (known: kodaira_thurston, heisenberg_sum, n4)");
}

double reduced_eta_rhs(double eta, double c, double /*L*/) {
  if (!(eta > 0) || !(eta + c > 0)) throw InputError("reduced eta ODE needs eta > 0 and eta + c > 0");
  return 3.0 * std::pow(eta, 1.0 / 6.0) * std::pow(eta + c, 1.0 / 6.0);
}

}  // namespace scf
