// Copyright 2026 The trimer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRIMER_CLI_HPP_
#define TRIMER_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "trimer/core.hpp"

namespace trimer::cli {

inline constexpr std::string_view kVersion = "0.1.0";

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kValidationFailed = 1, kUsage = 2, kNonConvergence = 3 };

/// Invalid command-line or embedded configuration.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Configuration

struct RunConfig {
  std::string command = "bs";
  double alpha = -1.0;
  std::vector<double> epsilons = {0.1};
  std::vector<Sector> sectors = {Sector::Bosonic};
  int levels = 3;
  std::optional<std::size_t> nodes;  // bs: momentum nodes; effective: FD nodes
  std::optional<double> nu_max;
  std::optional<double> L;
  std::optional<double> tol;
  std::string format = "csv";  // csv | json
  std::string out;             // empty: standard output
  // lightspec / potential sampling
  double x_min = -10.0;
  double x_max = 10.0;
  int x_count = 401;
  // convert
  double mass_heavy = 1.0;
  double mass_light = 0.01;
  double beta = -50.25;
  // airy
  int k_max = 10;
};

/// Throws UsageError on inconsistent settings.
void validate_config(const RunConfig& c);

nlohmann::json to_json(const RunConfig& c);
RunConfig config_from_json(const nlohmann::json& j);

/// Reads the configuration embedded in a CSV or JSON file written by emit.
RunConfig config_from_file(const std::string& path);

// ---------------------------------------------------------------------------
// Tables and emission

using Cell = std::variant<std::monostate, double, std::int64_t, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::json grid = nlohmann::json::object();  // grid sizes and domain choices

  std::size_t column(std::string_view name) const;  // throws std::out_of_range
  double number(std::size_t row, std::string_view name) const;  // NaN for empty cells
};

/// Locale-independent text of a double with 17 significant digits (trailing
/// zeros dropped); "nan", "inf", "-inf" for non-finite values.
std::string format_double(double v);

/// CSV: '#' metadata lines, then a header and one line per row. JSON: an
/// object {"metadata": ..., "records": [...]}. Empty cells and NaN become
/// empty fields in CSV and null in JSON.
void emit(const Table& t, const RunConfig& c, std::ostream& os);
void emit(const Table& t, const RunConfig& c);  // to c.out or standard output

nlohmann::json metadata(const Table& t, const RunConfig& c);

/// Parses an emitted JSON document back into a table (runs of the same
/// command reproduce the same columns).
Table table_from_json(const nlohmann::json& doc);

// ---------------------------------------------------------------------------
// Commands

struct Scaled {
  double mu, epsilon, alpha;
};

/// mu = 2 M m / (2 M + m), eps = sqrt(2 mu / M), alpha = 2 mu beta.
Scaled phys_to_scaled(double M, double m, double beta);

Table run_lightspec(const RunConfig& c);
Table run_potential(const RunConfig& c);
Table run_effective(const RunConfig& c);
Table run_bs(const RunConfig& c);
Table run_asymptotic(const RunConfig& c);
Table run_airy(const RunConfig& c);
Table run_convert(const RunConfig& c);

/// Dispatches on c.command (not "validate").
Table run_command(const RunConfig& c);

// ---------------------------------------------------------------------------
// Validation suite

struct CheckRecord {
  int id = 0;
  std::string name;
  std::string status;  // "pass", "fail", "skip"
  std::string measured;
  std::string bound;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::vector<std::string> details;
};

struct ValidateOptions {
  double alpha = -1.0;
  std::vector<double> epsilons = {0.2, 0.1, 0.05};
  int levels = 3;
  std::size_t bs_nodes = 1600;
  double bs_tol = 1e-9;
  std::vector<int> only;  // empty: all checks
};

ValidateOptions validate_options_from(const RunConfig& c);

/// Runs the acceptance checks; failures are recorded, never thrown.
std::vector<CheckRecord> run_validate(const ValidateOptions& opt);

/// One record per row: id, name, status, measured, bound, seconds, budget.
Table validation_table(const std::vector<CheckRecord>& records);

bool all_passed(const std::vector<CheckRecord>& records);

}  // namespace trimer::cli

#endif  // TRIMER_CLI_HPP_
