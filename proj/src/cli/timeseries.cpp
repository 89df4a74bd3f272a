#include "scflab/cli/timeseries.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "scflab/errors.hpp"

namespace scf::cli {

std::vector<std::string> column_names(int dim, const std::vector<std::string>& conserved_names) {
  std::vector<std::string> cols{"t"};
  for (int i = 1; i <= dim; ++i)
    for (int j = i + 1; j <= dim; ++j) cols.push_back("omega_" + std::to_string(i) + "_" + std::to_string(j));
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j) cols.push_back("J_" + std::to_string(i) + "_" + std::to_string(j));
  for (const char* c : {"norm_N_sq", "norm_R_sq", "drift_Jsq", "drift_compat", "drift_closed", "min_eig_g"})
    cols.emplace_back(c);
  cols.insert(cols.end(), conserved_names.begin(), conserved_names.end());
  return cols;
}

std::vector<double> row_values(const FlowState& state, const FlowDiagnostics& diag) {
  const int n = state.omega.dim();
  std::vector<double> v{state.t};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) v.push_back(state.omega(i, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v.push_back(state.J(i, j));
  for (double d : {diag.norm_N_sq, diag.norm_R_sq, diag.drift_Jsq, diag.drift_compat, diag.drift_closed,
                   diag.min_eig_g})
    v.push_back(d);
  for (const auto& [name, value] : diag.conserved) v.push_back(value);
  return v;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw InputError("not a number: '" + s + "'");
  return v;
}

TimeSeriesWriter::TimeSeriesWriter(std::ostream& os, bool jsonl, std::vector<std::string> columns)
    : os_(os), jsonl_(jsonl), columns_(std::move(columns)) {
  if (jsonl_) return;
  for (std::size_t i = 0; i < columns_.size(); ++i) os_ << (i ? "," : "") << columns_[i];
  os_ << '\n';
}

void TimeSeriesWriter::write(const FlowState& state, const FlowDiagnostics& diag) {
  const auto values = row_values(state, diag);
  if (values.size() != columns_.size()) throw InputError("row does not match the header");
  if (jsonl_) {
    os_ << '{';
    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::string text = format_double(values[i]);
      // JSON has no NaN/inf literals.
      const bool finite = std::isfinite(values[i]);
      os_ << (i ? "," : "") << '"' << columns_[i] << "\":" << (finite ? text : "null");
    }
    os_ << "}\n";
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) os_ << (i ? "," : "") << format_double(values[i]);
    os_ << '\n';
  }
}

CsvTable read_csv(std::istream& is) {
  CsvTable table;
  std::string line;
  auto split = [](const std::string& l) {
    std::vector<std::string> out;
    std::stringstream ss(l);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
  };
  if (!std::getline(is, line)) throw InputError("CSV is empty");
  table.header = split(line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != table.header.size()) throw InputError("CSV row width does not match header");
    std::vector<double> row;
    for (const auto& c : cells) row.push_back(parse_double(c));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace scf::cli
