#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "johnson/scheme.hpp"
#include "johnson/types.hpp"

namespace johnson::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kBadConfig = 2, kCapacity = 3 };

/// Runs the command line `args` (program name excluded), writing results to
/// `out` (or the --output file) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Output tables: fixed column order, floats at 12 significant digits.

using Cell = std::variant<std::string, Index, double>;

std::string format_double(double v);

class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<Cell> row);
  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t size() const { return rows_.size(); }

  void write_csv(std::ostream& os) const;
  nlohmann::ordered_json to_json() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

// Argument parsing shared by the subcommands.

/// "1.5" -> 3/2, "2" -> 2; throws std::invalid_argument otherwise.
HalfInt parse_half_int(const std::string& text);
/// Comma list of integers and inclusive ranges: "0,2..4" -> {0,2,3,4}.
std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);
std::vector<HalfInt> parse_half_int_list(const std::string& text);
std::string join_half_ints(const std::vector<HalfInt>& js);
std::string join_ints(const std::vector<int>& v);

struct HoppingOptions {
  std::string alpha;                   // list, zero-padded to k+1
  std::optional<double> exp_hopping;   // α_i = e^{-ci}
};

HoppingProfile resolve_hopping(const HoppingOptions& opt, const GraphSpec& spec);

struct FillingOptions {
  std::string se;                      // explicit j list
  std::optional<int> levels;           // lowest L levels
  std::optional<double> fraction;      // lowest max(1, round(f(k+1))) levels
  bool weighted = false;               // fraction counts degeneracy instead of labels
  bool include_zero = false;           // ground state keeps Ω_j = 0 levels
};

/// Levels to fill for a fraction f: label count, or the smallest L with
/// Σ_{lowest L} D_j >= f |X| when weighted.
int levels_for_fraction(double f, bool weighted, const GraphSpec& spec);

FillingSpec resolve_filling(const FillingOptions& opt, const EnergyTable& table,
                            const GraphSpec& spec);

struct SweepOptions {
  std::string figure;           // fig2a | fig2b | fig3a | fig3b | fig4
  int n = 30;
  std::optional<int> k;         // defaults to n/2
  int n_min = 8;                // fig2a range over even n
  int n_max = 30;
  std::string k_list;           // fig3a, defaults to 1..n/2
  FillingOptions fill;          // fig2a, fig3a and fig4; defaults to fraction 0.1
  std::string j1, j2;           // fig4 module; empty runs (6.5, 7.5) and (7.5, 7.5)
  std::string route = "default";  // default | all
  Index dense_cap = default_dense_cap();
};

struct SweepResult {
  Table table;
  double max_discrepancy = 0.0;  // across routes, when route = all
  bool bound_ok = true;          // S <= |SV| ln 2 on every row
};

SweepResult run_sweep(const SweepOptions& opt);

}  // namespace johnson::cli
