#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace spinor_disc::cli {

inline constexpr const char* kToolName = "spinor_disc";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

using Value = std::variant<bool, long long, double, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

/// Everything one command emits. `meta` is written first in both formats.
struct Document {
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  std::vector<Table> tables;
  bool ok = true;               // false turns into exit code 1
  std::string failure_summary;  // first failing check, if any
};

/// CSV: '#'-prefixed header lines (tool, version, meta), then each table as
/// "# table: <name>", a column row and data rows; blank line between tables.
std::string render_csv(const Document& doc);
/// JSON object {"meta": {...}, "<table>": [ {col: value, ...}, ... ], ...}.
std::string render_json(const Document& doc);

/// Shortest decimal that round-trips, '.' separator, independent of locale.
std::string format_double(double v);
/// RFC 4180 quoting when the field needs it.
std::string csv_field(const std::string& s);

enum class Format { Csv, Json };

struct RunConfig {
  std::string command;
  std::vector<double> epsilons;       // resolved from --epsilon / --epsilon-range
  std::optional<std::string> epsilon_spec;
  std::vector<int> ns;                // resolved from --n ("k" or "a:b")
  std::optional<std::string> n_spec;
  std::vector<int> l0s;               // resolved from --l0 / --l0-range
  std::optional<std::string> l0_spec;
  int grid_x = 0;                     // 0 means command default
  int grid_e = 0;
  double delta = 1e-10;
  Format format = Format::Csv;
  std::string out;                    // empty means stdout
  std::string figure_id;
  std::vector<int> dims;              // clifford
  std::vector<double> slices;         // figure cross-sections
  bool inject_fault = false;

  nlohmann::ordered_json echo() const;
};

/// a:b:steps with steps >= 1 points, endpoints included.
std::vector<double> parse_double_range(const std::string& spec);
/// "k" or "a:b" (inclusive).
std::vector<int> parse_int_range(const std::string& spec);
/// "NX" or "NXxNE"; both >= 2.
std::pair<int, int> parse_grid(const std::string& spec);

Document cmd_spectrum(const RunConfig& cfg);
Document cmd_mode(const RunConfig& cfg);
Document cmd_figure(const RunConfig& cfg);
Document cmd_verify(const RunConfig& cfg);
Document cmd_clifford(const RunConfig& cfg);

/// Full command line (args[0] is the program name). Writes the rendered document
/// to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinor_disc::cli
