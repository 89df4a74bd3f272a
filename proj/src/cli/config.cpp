#include "scflab/cli/config.hpp"

#include <fstream>
#include <sstream>

namespace scf::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
  throw ConfigError(field + ": " + msg);
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<int>();
}

int index_in(const json& j, const std::string& field, int n) {
  const int v = integer(j, field);
  if (v < 1 || v > n) fail(field, "index " + std::to_string(v) + " outside 1.." + std::to_string(n));
  return v;
}

AlmostKahlerStructure parse_inline(const json& src) {
  if (!src.contains("dim")) fail("source.dim", "missing");
  const int n = integer(src.at("dim"), "source.dim");
  if (n < 1) fail("source.dim", "must be positive");

  std::vector<BracketEntry> brackets;
  if (src.contains("brackets")) {
    const json& list = src.at("brackets");
    if (!list.is_array()) fail("source.brackets", "expected a list of [i, j, k, value]");
    for (std::size_t r = 0; r < list.size(); ++r) {
      const std::string f = "source.brackets[" + std::to_string(r) + "]";
      const json& e = list[r];
      if (!e.is_array() || e.size() != 4) fail(f, "expected [i, j, k, value]");
      BracketEntry b{index_in(e[0], f + ".i", n), index_in(e[1], f + ".j", n), index_in(e[2], f + ".k", n),
                     number(e[3], f + ".value")};
      if (b.i >= b.j) fail(f, "needs i < j");
      brackets.push_back(b);
    }
  }
  LieAlgebra L = LieAlgebra::from_brackets(n, brackets);
  require_jacobi(L);

  if (!src.contains("omega")) fail("source.omega", "missing");
  const json& om = src.at("omega");
  if (!om.is_array()) fail("source.omega", "expected a list of [i, j, value]");
  Matrix w = Matrix::Zero(n, n);
  for (std::size_t r = 0; r < om.size(); ++r) {
    const std::string f = "source.omega[" + std::to_string(r) + "]";
    const json& e = om[r];
    if (!e.is_array() || e.size() != 3) fail(f, "expected [i, j, value]");
    const int i = index_in(e[0], f + ".i", n), j = index_in(e[1], f + ".j", n);
    if (i >= j) fail(f, "needs i < j");
    w(i - 1, j - 1) += number(e[2], f + ".value");
  }

  if (!src.contains("J")) fail("source.J", "missing");
  const json& jm = src.at("J");
  if (!jm.is_array()) fail("source.J", "expected an n x n matrix");
  Endomorphism J(n, n);
  if (jm.size() == static_cast<std::size_t>(n) * n && (jm.empty() || jm[0].is_number())) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        J(i, j) = number(jm[i * n + j], "source.J[" + std::to_string(i * n + j) + "]");
  } else if (jm.size() == static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) {
      const std::string f = "source.J[" + std::to_string(i) + "]";
      if (!jm[i].is_array() || jm[i].size() != static_cast<std::size_t>(n)) fail(f, "expected a row of length n");
      for (int j = 0; j < n; ++j) J(i, j) = number(jm[i][j], f + "[" + std::to_string(j) + "]");
    }
  } else {
    fail("source.J", "expected n rows of n entries or n*n row-major entries");
  }
  return AlmostKahlerStructure{std::move(L), TwoForm::from_upper(w), std::move(J)};
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "jsonl" || s == "json-lines") return OutputFormat::JsonLines;
  throw ConfigError("output.format: expected csv or jsonl, got '" + s + "'");
}

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  RunConfig cfg;
  if (doc.contains("source")) {
    const json& src = doc.at("source");
    if (!src.is_object()) fail("source", "expected an object");
    if (src.contains("example")) {
      if (!src.at("example").is_string()) fail("source.example", "expected a string");
      cfg.example = src.at("example").get<std::string>();
      if (src.contains("params")) {
        const json& p = src.at("params");
        if (!p.is_object()) fail("source.params", "expected an object");
        for (const auto& [k, v] : p.items()) cfg.params[k] = number(v, "source.params." + k);
      }
    } else {
      cfg.structure = parse_inline(src);
    }
  }
  if (doc.contains("flow")) {
    const json& f = doc.at("flow");
    if (!f.is_object()) fail("flow", "expected an object");
    if (f.contains("t_end")) cfg.flow.t_end = number(f.at("t_end"), "flow.t_end");
    if (f.contains("dt")) cfg.flow.dt = number(f.at("dt"), "flow.dt");
    if (f.contains("record_every")) cfg.flow.record_every = integer(f.at("record_every"), "flow.record_every");
    if (f.contains("drift_tol")) cfg.flow.drift_tol = number(f.at("drift_tol"), "flow.drift_tol");
    if (f.contains("renormalize_J")) {
      if (!f.at("renormalize_J").is_boolean()) fail("flow.renormalize_J", "expected a boolean");
      cfg.flow.renormalize_J = f.at("renormalize_J").get<bool>();
    }
  }
  if (doc.contains("output")) {
    const json& o = doc.at("output");
    if (!o.is_object()) fail("output", "expected an object");
    if (o.contains("path")) {
      if (!o.at("path").is_string()) fail("output.path", "expected a string");
      cfg.out_path = o.at("path").get<std::string>();
    }
    if (o.contains("format")) {
      if (!o.at("format").is_string()) fail("output.format", "expected a string");
      cfg.format = parse_format(o.at("format").get<std::string>());
    }
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON (") + e.what() + ")");
  }
  return parse_config(doc);
}

ResolvedSource resolve_source(const RunConfig& cfg) {
  if (cfg.example) {
    CatalogEntry entry = make_entry(*cfg.example, cfg.params);
    AlmostKahlerStructure s = entry.initial_structure();
    return ResolvedSource{*cfg.example, std::move(s), std::move(entry)};
  }
  if (cfg.structure) return ResolvedSource{"inline", *cfg.structure, std::nullopt};
  throw ConfigError("source: give --example NAME or a config with a source");
}

}  // namespace scf::cli
