#pragma once

#include <iosfwd>

#include "sdlcp/solver.hpp"

namespace sdlcp {

// A parameter grid over (theta, step rule, mu0) for one problem; every cell
// is an independent solver run.
struct GridSpec {
  std::string problem;  // builtin name, random:<n>:<seed>, or a file path
  std::vector<double> thetas;
  std::vector<StepRule> alphas;
  std::vector<std::optional<double>> mu0s;  // empty optional = trace rule
  double tau = 2.0;
  double eps = 1e-6;
  std::string kernel = "new";
  DirectionRule direction = DirectionRule::ClassicalNT;
  int max_inner_total = 10000;
};

/// Loads a grid spec from JSON:
///   {"problem": "example1", "thetas": [0.5], "alphas": [0.3, "invlog4d"],
///    "mu0s": ["trace", 0.05], "tau": 2, "eps": 1e-6,
///    "kernel": "new", "direction": "nt"}
/// Throws ParameterError on malformed or empty fields.
GridSpec load_grid_spec(std::istream& in);
GridSpec load_grid_spec_file(const std::string& path);

struct GridCell {
  double theta = 0.0;
  std::string alpha;   // step rule label
  std::string mu0;     // "trace" or the numeric value
  int inner = 0;
  int outer = 0;
  double time_s = 0.0;
  std::string status;  // "ok" or the error name
};

struct GridReport {
  std::string problem;
  std::string timestamp;  // ISO 8601 UTC
  GridSpec spec;
  std::vector<GridCell> rows;  // ordered by (theta index, alpha index, mu0 index)
};

/// Runs every cell (in parallel when asked; results are emitted in grid
/// order regardless). Per-cell failures land in the status column.
GridReport run_grid(const GridSpec& spec, bool parallel = true);

/// CSV: comment header (problem, config echo, timestamp) then
/// theta,alpha_rule,mu0,inner,outer,time_s,status.
void write_csv(const GridReport& report, std::ostream& out);

/// Markdown tables, one per theta, cells formatted "inn / out / T".
void write_markdown(const GridReport& report, std::ostream& out);

}  // namespace sdlcp
