#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "scflab/catalog.hpp"
#include "scflab/errors.hpp"

namespace scf::cli {

enum class OutputFormat { Csv, JsonLines };

/// Everything a command needs, merged from the JSON config and the flags.
struct RunConfig {
  std::optional<std::string> example;
  Params params;
  /// Inline structure, used when no example is named.
  std::optional<AlmostKahlerStructure> structure;
  IntegratorConfig flow{.t_end = 1.0, .dt = 1e-3, .drift_tol = 1e-6, .renormalize_J = false, .record_every = 100};
  std::optional<std::string> out_path;
  OutputFormat format = OutputFormat::Csv;
};

/// Thrown for unusable configs; the message names the offending field.
class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

/// Parses the JSON config document:
///   {"source": {"example": NAME, "params": {...}}
///           or {"dim": n, "brackets": [[i, j, k, v], ...], "omega": [[i, j, v], ...],
///               "J": n x n rows or n*n row-major list},
///    "flow": {"t_end", "dt", "record_every", "renormalize_J", "drift_tol"},
///    "output": {"path", "format": "csv" | "jsonl"}}
/// Indices are 1-based with i < j. Inline brackets must satisfy Jacobi.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config_file(const std::string& path);

OutputFormat parse_format(const std::string& s);

/// The structure and, for catalog sources, the entry it came from.
struct ResolvedSource {
  std::string label;
  AlmostKahlerStructure structure;
  std::optional<CatalogEntry> entry;
};

/// Throws ConfigError when neither an example nor an inline structure is set.
ResolvedSource resolve_source(const RunConfig& cfg);

}  // namespace scf::cli
