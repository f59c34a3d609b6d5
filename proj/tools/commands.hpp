#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace thermal_ising::cli {

// Bad flags or ranges; exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation failed at a reported point; exit code 3.
class ComputationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitComputation = 3;

// "a:b:n" (inclusive endpoints, n points), a single number, or a comma list.
std::vector<double> parse_range(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);
std::vector<std::string> parse_word_list(const std::string& text);

struct RunConfig {
  std::string command;
  double m = 1.0;
  double T = 1.0;
  std::string x = "1:5:41";
  std::string t = "0";
  std::string theta;   // scatter-check; empty uses p
  std::string p = "1";  // scatter-check momenta p_theta
  std::string method = "formfactor";
  std::string j = "-1";
  std::string representations = "residue,direct";
  int n_max = 20;
  int n_sigma = 4;
  int n_mu = 3;
  int mu_max = 3;
  double A = 0.0, B = 0.0, C = 0.0;
  // scatter-check
  double x_min = -10.0;
  double x_max = 10.0;
  double step = 1e-3;
  double decay_tol = 1e-4;
  double tolerance = 0.05;
  bool zero_field = false;
  // glm-solve
  std::string rule = "gauss";
  // asympt-verify
  int draws = 20;
  unsigned long seed = 1;
  std::string output_path;  // empty writes to stdout
  std::string format = "csv";

  void validate() const;
  nlohmann::ordered_json to_json() const;
};

using Cell = std::variant<std::monostate, double, long, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json summary;  // omitted when null
  std::vector<std::string> warnings;
};

Table cmd_corr(const RunConfig& cfg);
Table cmd_scatter_check(const RunConfig& cfg);
Table cmd_kernels(const RunConfig& cfg);
Table cmd_glm_solve(const RunConfig& cfg);
Table cmd_asympt_verify(const RunConfig& cfg);

// Dispatches on cfg.command.
Table run_command(const RunConfig& cfg);

// csv: header line then rows, '.' decimal, shortest round-trip doubles;
// json: {"meta": cfg, "rows": [{column: value}], "summary": ...}
void write_table(const Table& table, const RunConfig& cfg, std::ostream& out);
std::string format_double(double v);

}  // namespace thermal_ising::cli
