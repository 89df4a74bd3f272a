#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scflab/flow.hpp"

namespace scf {

using Params = std::map<std::string, double>;

/// One of the reference examples: an algebra, a parametrized family of
/// almost Kahler structures, the closed-form flow where known, and the
/// conserved quantities.
struct CatalogEntry {
  std::string name;
  LieAlgebra algebra;
  /// Names of the family parameters, in display order.
  std::vector<std::string> param_names;
  /// Parameters of the initial structure.
  Params initial_params;
  std::function<AlmostKahlerStructure(const Params&)> build{};
  /// Reads family parameters back from (omega, J); nullopt when the state is
  /// not of the family's shape. Exact on family members.
  std::function<std::optional<Params>(const FlowState&)> project{};
  /// Closed-form solution from the initial parameters, empty when unknown.
  std::function<std::optional<FlowState>(double t)> analytic{};
  /// Conserved quantities as functions of the current family parameters.
  std::vector<std::pair<std::string, std::function<double(const Params&)>>> conserved{};

  AlmostKahlerStructure initial_structure() const { return build(initial_params); }
  FlowState initial_state() const;
};

/// h3 + R, omega = e13 - e24, J(alpha, beta).
CatalogEntry kodaira_thurston(double alpha0 = 1, double beta0 = 1);

/// h3 + h3, omega = e15 + e24 + e36, J(alpha, beta, gamma).
CatalogEntry heisenberg_sum(double alpha0 = 1, double beta0 = 1, double gamma0 = 1);

/// n4 with omega0 = e13 + e24 and J0 = e3 (x) e^1 + e4 (x) e^2 - e1 (x) e^3 - e2 (x) e^4.
CatalogEntry n4_entry();

/// Entries of J in the n4 family, laid out as in
///   J = [[0, a', b', 0], [a, 0, 0, c'], [b, 0, 0, d'], [0, c, d, 0]].
struct N4FamilyParams {
  double a = 0, b = 1, c = 1, d = 0;
  double ap = 0, bp = -1, cp = -1, dp = 0;

  /// Omega coefficient of e^1 ^ e^2 forced by compatibility, (a' + d) / b'.
  double gamma() const { return (ap + d) / bp; }
  Endomorphism J() const;
  static N4FamilyParams from_J(const Endomorphism& J);
  /// Closed-form solution with y = (1 + 5t/2)^(1/5).
  static N4FamilyParams analytic(double t);
  Params to_params() const;
  static N4FamilyParams from_params(const Params& p);
};

/// Throws InputError naming the first violated relation.
AlmostKahlerStructure n4_family(const N4FamilyParams& p, double tol = 1e-10);

LieAlgebra heisenberg3();
LieAlgebra kodaira_thurston_algebra();
LieAlgebra heisenberg_sum_algebra();
LieAlgebra n4_algebra();

std::vector<std::string> list_entries();

/// Looks up an entry by name; params override the defaults of 1.
CatalogEntry make_entry(const std::string& name, const Params& params = {});

/// d_t eta = 3 eta^(1/6) (eta + c)^(1/6). The L argument is carried for the
/// caller's bookkeeping and does not enter the right-hand side.
double reduced_eta_rhs(double eta, double c, double L);

}  // namespace scf
