#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scflab/ak_structure.hpp"

namespace scf {

struct InvariantCheck {
  std::string name;
  double value = 0;
  double tol = 0;
  bool passed = false;
  bool skipped = false;
  std::string note;
};

struct InvariantSuiteOptions {
  std::uint64_t seed = 0;
  int random_samples = 100;
  double flow_t_end = 0.5;
  double flow_dt = 1e-3;
};

/// Runs the algebraic, curvature and short-flow invariants on one structure.
std::vector<InvariantCheck> run_invariant_suite(const AlmostKahlerStructure& S,
                                                const InvariantSuiteOptions& opts = {});

bool all_passed(const std::vector<InvariantCheck>& checks);

}  // namespace scf
