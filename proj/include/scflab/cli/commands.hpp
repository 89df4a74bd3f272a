#pragma once

#include <cstdint>
#include <iosfwd>

#include "scflab/cli/config.hpp"

namespace scf::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kBadConfig = 1,
  kDriftExceeded = 2,
  kMetricDegenerated = 3,
  kCheckFailed = 4,
};

int cmd_list(std::ostream& out);
int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Time series goes to cfg.out_path when set, otherwise to `out`; the JSON
/// summary goes to `out` after the series when writing to a file, and to
/// `err` when the series itself occupies `out`.
int cmd_flow(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, std::ostream& err);
int cmd_static(int n, std::ostream& out, std::ostream& err);

/// Full command-line entry point (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scf::cli
