#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "scflab/flow.hpp"

namespace scf::cli {

/// Column order of a time-series row:
///   t, omega_i_j for i < j (lexicographic, 1-based), J_i_j for all i, j
///   (row-major), norm_N_sq, norm_R_sq, drift_Jsq, drift_compat, drift_closed,
///   min_eig_g, then one column per conserved quantity.
std::vector<std::string> column_names(int dim, const std::vector<std::string>& conserved_names);

std::vector<double> row_values(const FlowState& state, const FlowDiagnostics& diag);

/// Shortest text that parses back to the same double (at most 17 significant
/// digits), independent of the locale.
std::string format_double(double v);
double parse_double(const std::string& s);

class TimeSeriesWriter {
 public:
  TimeSeriesWriter(std::ostream& os, bool jsonl, std::vector<std::string> columns);
  void write(const FlowState& state, const FlowDiagnostics& diag);

 private:
  std::ostream& os_;
  bool jsonl_;
  std::vector<std::string> columns_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

CsvTable read_csv(std::istream& is);

}  // namespace scf::cli
