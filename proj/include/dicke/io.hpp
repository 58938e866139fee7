#pragma once

// State files (JSON) and curve output (CSV / JSON).
//
// A state file is either an explicit matrix
//
//   {"matrix": [[re, im], ... 16 pairs, row-major in the |11>,|10>,|01>,|00> order]}
//
// or a named family:
//
//   {"family": "product", "psi": [[re, im], [re, im]] | "0" | "1", "phi": ...}
//   {"family": "bell", "which": "phi+" | "phi-" | "psi+" | "psi-"}
//   {"family": "mes", "a": 0.5, "theta1": 0.0, "theta2": 3.14159}
//   {"family": "bell_diagonal", "p": [p1, p2, p3, p4]}
//   {"family": "werner", "p": 0.5}
//   {"family": "mems", "delta": 0.8}
//   {"family": "basis", "a": 1, "b": 0}

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dicke/qmat.hpp"

namespace dicke {

struct StateFile {
  DensityMatrix state;
  /// Family name when the file used a descriptor, empty for explicit matrices.
  std::string family;
};

/// Throws ParseError for malformed input and InvalidState / InvalidWeights /
/// NotNormalized / InvalidParameter when the described state is not valid.
StateFile parse_state(const nlohmann::json& j);
StateFile parse_state(const std::string& text);
StateFile parse_state(const char* text);
StateFile read_state_file(const std::string& path);

/// Explicit-matrix form of a state.
nlohmann::json state_to_json(const DensityMatrix& rho);
std::string write_state(const DensityMatrix& rho);

/// Column-oriented numeric table with a metadata envelope.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  nlohmann::json metadata = nlohmann::json::object();

  std::size_t column(const std::string& name) const;
  std::vector<double> values(const std::string& name) const;
};

/// One sampled point of a trajectory.
struct TimeRecord {
  double t = 0.0;
  double concurrence = 0.0;
  std::optional<ComplexMatrix4> rho;
};

struct TimeSeries {
  std::string scenario;
  double gamma0 = 1.0;
  double g = 1.0;
  double t_max = 0.0;
  std::size_t samples = 0;
  std::string method;
  std::vector<TimeRecord> records;

  /// Columns t, concurrence and, when every record carries rho,
  /// rho_re_jk / rho_im_jk for j, k = 1..4.
  Table to_table() const;
};

enum class OutputFormat { Csv, Json };

std::optional<OutputFormat> parse_format(const std::string& name);

/// Header row then one line per row, 17 significant digits.
void write_csv(std::ostream& os, const Table& table);
/// {"metadata": {...}, "columns": [...], "rows": [[...], ...]}
void write_json(std::ostream& os, const Table& table);
void write_table(std::ostream& os, const Table& table, OutputFormat format);

}  // namespace dicke
