// Command-line front end: single solves, parameter grids, and the
// complexity-bound calculator.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "sdlcp/grid.hpp"

namespace {

using namespace sdlcp;

struct SolveArgs {
  std::string problem;
  double theta = 0.5;
  std::string alpha = "0.9";
  std::string mu0 = "trace";
  double tau = 2.0;
  double eps = 1e-6;
  std::string kernel = "new";
  std::string direction = "nt";
  int max_inner = 10000;
  bool verbose = false;
};

std::optional<double> parse_mu0(const std::string& text) {
  if (text == "trace") return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !(v > 0.0)) throw ParameterError("");
    return v;
  } catch (const std::logic_error&) {
    throw ParameterError("--mu0 expects a positive number or \"trace\", got '" + text + "'");
  }
}

DirectionRule parse_direction(const std::string& text) {
  if (text == "nt") return DirectionRule::ClassicalNT;
  if (text == "kernel") return DirectionRule::KernelGradient;
  throw ParameterError("--direction expects nt or kernel");
}

void print_matrix(std::ostream& out, const SymmetricMatrix& m, const char* label) {
  out << label << ":\n";
  for (int i = 0; i < m.dim(); i++) {
    out << "  ";
    for (int j = 0; j < m.dim(); j++) {
      out << std::setw(11) << std::fixed << std::setprecision(6) << m(i, j);
    }
    out << "\n";
  }
  out << std::defaultfloat;
}

void dump_trace(std::ostream& out, const SolveReport& r) {
  out << "iter,outer,mu,psi,delta,alpha,decrease,clamped\n";
  for (std::size_t i = 0; i < r.trace.size(); i++) {
    const auto& rec = r.trace[i];
    out << i + 1 << ',' << rec.outer << ',' << rec.mu << ',' << rec.barrier << ',' << rec.delta
        << ',' << rec.alpha << ',' << rec.barrier_decrease << ',' << (rec.clamped ? 1 : 0)
        << "\n";
  }
}

int cmd_solve(const SolveArgs& args) {
  const SdlcpProblem problem = problem_by_name(args.problem);
  SolverConfig cfg;
  cfg.theta = args.theta;
  cfg.tau = args.tau;
  cfg.eps = args.eps;
  cfg.mu0 = parse_mu0(args.mu0);
  cfg.step = StepRule::parse(args.alpha);
  cfg.kernel = args.kernel;
  cfg.direction = parse_direction(args.direction);
  cfg.max_inner_total = args.max_inner;

  const SolveReport r = solve(problem, cfg);
  if (args.verbose) dump_trace(std::cerr, r);

  const auto res = residuals(problem, r.final_x, r.final_y);
  std::cout << "problem: " << (problem.name.empty() ? args.problem : problem.name)
            << " (n = " << problem.n << ")\n";
  std::cout << "config: theta=" << cfg.theta << " alpha=" << cfg.step.label()
            << " mu0=" << args.mu0 << " tau=" << cfg.tau << " eps=" << cfg.eps
            << " kernel=" << cfg.kernel << " direction=" << args.direction << "\n";
  std::cout << "iterations: inner=" << r.inner_total << " outer=" << r.outer_total << "\n";
  std::cout << "wall_time_s: " << std::fixed << std::setprecision(2) << r.wall_time
            << std::defaultfloat << "\n";
  std::cout << "final_mu: " << r.final_mu << "\n";
  std::cout << "feasibility: " << res.feasibility << "\n";
  std::cout << "complementarity: " << res.complementarity << "\n";
  std::cout << "min_eig_x: " << res.min_eig_x << "  min_eig_y: " << res.min_eig_y << "\n";
  for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
  print_matrix(std::cout, r.final_x, "final X");
  if (problem.x_ref) {
    double max_diff = 0.0;
    for (int i = 0; i < problem.n; i++)
      for (int j = 0; j < problem.n; j++) {
        max_diff = std::max(max_diff, std::fabs(r.final_x(i, j) - (*problem.x_ref)(i, j)));
      }
    std::cout << "max |X - X_ref|: " << max_diff << "\n";
  }
  return 0;
}

struct GridOverrides {
  std::optional<double> tau;
  std::optional<double> eps;
  std::optional<std::string> kernel;
  std::optional<std::string> direction;
};

int cmd_grid(const std::string& spec_path, const std::string& out_path,
             const GridOverrides& over, bool verbose) {
  GridSpec spec = load_grid_spec_file(spec_path);
  if (over.tau) spec.tau = *over.tau;
  if (over.eps) spec.eps = *over.eps;
  if (over.kernel) spec.kernel = *over.kernel;
  if (over.direction) spec.direction = parse_direction(*over.direction);
  const GridReport report = run_grid(spec);
  if (out_path.empty()) {
    write_csv(report, std::cout);
  } else {
    std::ofstream csv(out_path);
    if (!csv) throw ParameterError("cannot write '" + out_path + "'");
    write_csv(report, csv);
    const std::string md_path =
        std::filesystem::path(out_path).replace_extension(".md").string();
    std::ofstream md(md_path);
    write_markdown(report, md);
    std::cout << "wrote " << out_path << " and " << md_path << "\n";
  }
  if (verbose) write_markdown(report, std::cerr);
  return 0;
}

int cmd_bound(int n, double mu0, double eps, double theta, double tau) {
  const double psi0 = psi0_bound(tau, theta, n);
  const double k = inner_bound(psi0);
  const double total = total_bound(n, mu0, eps, theta, tau);
  std::cout << "psi0_bound: " << psi0 << "\n";
  std::cout << "inner_bound_per_outer: " << k << "\n";
  std::cout << "total_bound: " << total << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel-based interior-point solver for monotone semidefinite linear "
               "complementarity problems"};
  app.require_subcommand(1);

  const auto open_unit_interval = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          const double v = std::stod(s);
          if (v > 0.0 && v < 1.0) return {};
        } catch (const std::logic_error&) {
        }
        return "value must lie strictly between 0 and 1";
      },
      "FLOAT in (0,1)");

  SolveArgs sargs;
  auto* solve_cmd = app.add_subcommand("solve", "Run the solver on one problem");
  solve_cmd->add_option("problem", sargs.problem,
                        "example1|example2|example3|random:<n>:<seed>|<file.json>")
      ->required();
  solve_cmd->add_option("--theta", sargs.theta, "barrier update factor")->check(open_unit_interval);
  solve_cmd->add_option("--alpha", sargs.alpha, "step size: number or invlog4d|inv1plog|default");
  solve_cmd->add_option("--mu0", sargs.mu0, "initial mu: number or trace");
  solve_cmd->add_option("--tau", sargs.tau, "proximity threshold (>= 1)");
  solve_cmd->add_option("--eps", sargs.eps, "accuracy target on n*mu");
  solve_cmd->add_option("--kernel", sargs.kernel, "proximity kernel")
      ->check(CLI::IsMember({"new", "logbarrier"}));
  solve_cmd->add_option("--direction", sargs.direction, "Newton rhs: nt (classical) or kernel")
      ->check(CLI::IsMember({"nt", "kernel"}));
  solve_cmd->add_option("--max-inner", sargs.max_inner, "cumulative inner iteration cap");
  solve_cmd->add_flag("-v,--verbose", sargs.verbose, "dump per-iteration trace CSV to stderr");

  std::string grid_spec, grid_out;
  GridOverrides grid_over;
  bool grid_verbose = false;
  auto* grid_cmd = app.add_subcommand("grid", "Run a parameter grid from a JSON spec");
  grid_cmd->add_option("spec", grid_spec, "grid spec file")->required();
  grid_cmd->add_option("--out", grid_out, "CSV output path (markdown lands beside it)");
  grid_cmd->add_option("--tau", grid_over.tau, "override the spec's tau");
  grid_cmd->add_option("--eps", grid_over.eps, "override the spec's eps");
  grid_cmd->add_option("--kernel", grid_over.kernel, "override the spec's kernel")
      ->check(CLI::IsMember({"new", "logbarrier"}));
  grid_cmd->add_option("--direction", grid_over.direction, "override the spec's direction")
      ->check(CLI::IsMember({"nt", "kernel"}));
  grid_cmd->add_flag("-v,--verbose", grid_verbose, "echo the markdown tables to stderr");

  int bn = 5;
  double bmu0 = 0.0005, beps = 1e-6, btheta = 0.5, btau = 2.0;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate the iteration-bound formulas");
  bound_cmd->add_option("--n", bn, "dimension")->required();
  bound_cmd->add_option("--mu0", bmu0, "initial mu")->required();
  bound_cmd->add_option("--eps", beps, "accuracy")->required();
  bound_cmd->add_option("--theta", btheta, "barrier update factor")->check(open_unit_interval);
  bound_cmd->add_option("--tau", btau, "proximity threshold");

  auto* list_cmd = app.add_subcommand("list-problems", "List built-in problem names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(sargs);
    if (grid_cmd->parsed()) return cmd_grid(grid_spec, grid_out, grid_verbose);
    if (bound_cmd->parsed()) return cmd_bound(bn, bmu0, beps, btheta, btau);
    if (list_cmd->parsed()) {
      for (const auto& name : sdlcp::builtin_problem_names()) std::cout << name << "\n";
      return 0;
    }
  } catch (const sdlcp::ParameterError& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 2;
  } catch (const sdlcp::Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
