#include "sdlcp/grid.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace sdlcp {

namespace {

using nlohmann::json;

std::string format_mu0(const std::optional<double>& mu0) {
  if (!mu0) return "trace";
  std::ostringstream os;
  os << *mu0;
  return os.str();
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

const char* direction_label(DirectionRule d) {
  return d == DirectionRule::ClassicalNT ? "nt" : "kernel";
}

}  // namespace

GridSpec load_grid_spec(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("grid spec is not valid JSON: ") + e.what());
  }
  GridSpec spec;
  try {
    spec.problem = j.at("problem").get<std::string>();
    for (const auto& t : j.at("thetas")) spec.thetas.push_back(t.get<double>());
    for (const auto& a : j.at("alphas")) {
      if (a.is_string()) {
        spec.alphas.push_back(StepRule::parse(a.get<std::string>()));
      } else {
        spec.alphas.push_back(StepRule::fixed(a.get<double>()));
      }
    }
    for (const auto& m : j.at("mu0s")) {
      if (m.is_string()) {
        if (m.get<std::string>() != "trace") {
          throw ParameterError("mu0 entries are numbers or \"trace\"");
        }
        spec.mu0s.push_back(std::nullopt);
      } else {
        spec.mu0s.push_back(m.get<double>());
      }
    }
    spec.tau = j.value("tau", 2.0);
    spec.eps = j.value("eps", 1e-6);
    spec.kernel = j.value("kernel", std::string("new"));
    spec.max_inner_total = j.value("max_inner_total", 10000);
    const std::string dir = j.value("direction", std::string("nt"));
    if (dir == "nt") {
      spec.direction = DirectionRule::ClassicalNT;
    } else if (dir == "kernel") {
      spec.direction = DirectionRule::KernelGradient;
    } else {
      throw ParameterError("direction must be \"nt\" or \"kernel\"");
    }
  } catch (const json::exception& e) {
    throw ParameterError(std::string("grid spec is missing fields: ") + e.what());
  }
  if (spec.thetas.empty() || spec.alphas.empty() || spec.mu0s.empty()) {
    throw ParameterError("grid spec lists must be non-empty");
  }
  for (double theta : spec.thetas) {
    if (!(theta > 0.0 && theta < 1.0)) {
      throw ParameterError("grid theta must lie in (0, 1)");
    }
  }
  kernel_by_name(spec.kernel);
  return spec;
}

GridSpec load_grid_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open grid spec '" + path + "'");
  return load_grid_spec(in);
}

GridReport run_grid(const GridSpec& spec, bool parallel) {
  const SdlcpProblem problem = problem_by_name(spec.problem);

  GridReport report;
  report.problem = spec.problem;
  report.timestamp = utc_timestamp();
  report.spec = spec;

  struct Cell {
    double theta;
    StepRule alpha;
    std::optional<double> mu0;
  };
  std::vector<Cell> cells;
  for (double theta : spec.thetas)
    for (const auto& alpha : spec.alphas)
      for (const auto& mu0 : spec.mu0s) cells.push_back({theta, alpha, mu0});

  const auto run_cell = [&](const Cell& cell) {
    GridCell out;
    out.theta = cell.theta;
    out.alpha = cell.alpha.label();
    out.mu0 = format_mu0(cell.mu0);
    SolverConfig cfg;
    cfg.tau = spec.tau;
    cfg.eps = spec.eps;
    cfg.theta = cell.theta;
    cfg.mu0 = cell.mu0;
    cfg.step = cell.alpha;
    cfg.kernel = spec.kernel;
    cfg.direction = spec.direction;
    cfg.max_inner_total = spec.max_inner_total;
    try {
      const SolveReport r = solve(problem, cfg);
      out.inner = r.inner_total;
      out.outer = r.outer_total;
      out.time_s = r.wall_time;
      out.status = "ok";
    } catch (const Error& e) {
      out.status = e.name();
    }
    return out;
  };

  if (parallel) {
    std::vector<std::future<GridCell>> futures;
    futures.reserve(cells.size());
    for (const auto& cell : cells) {
      futures.push_back(std::async(std::launch::async | std::launch::deferred,
                                   [&run_cell, cell] { return run_cell(cell); }));
    }
    for (auto& f : futures) report.rows.push_back(f.get());
  } else {
    for (const auto& cell : cells) report.rows.push_back(run_cell(cell));
  }
  return report;
}

void write_csv(const GridReport& report, std::ostream& out) {
  out << "# problem: " << report.problem << "\n";
  out << "# tau: " << report.spec.tau << " eps: " << report.spec.eps
      << " kernel: " << report.spec.kernel
      << " direction: " << direction_label(report.spec.direction) << "\n";
  out << "# generated: " << report.timestamp << "\n";
  out << "theta,alpha_rule,mu0,inner,outer,time_s,status\n";
  for (const auto& row : report.rows) {
    out << row.theta << ',' << row.alpha << ',' << row.mu0 << ',' << row.inner << ','
        << row.outer << ',' << std::fixed << std::setprecision(2) << row.time_s
        << std::defaultfloat << ',' << row.status << "\n";
  }
}

void write_markdown(const GridReport& report, std::ostream& out) {
  out << "## " << report.problem << " (tau = " << report.spec.tau
      << ", eps = " << report.spec.eps << ", kernel = " << report.spec.kernel
      << ", direction = " << direction_label(report.spec.direction) << ")\n";

  const auto& spec = report.spec;
  std::size_t idx = 0;
  for (double theta : spec.thetas) {
    out << "\n### theta = " << theta << "\n\n";
    out << "| alpha \\ mu0 |";
    for (const auto& mu0 : spec.mu0s) out << ' ' << format_mu0(mu0) << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < spec.mu0s.size(); i++) out << "---|";
    out << "\n";
    for (const auto& alpha : spec.alphas) {
      out << "| " << alpha.label() << " |";
      for (std::size_t i = 0; i < spec.mu0s.size(); i++, idx++) {
        const auto& row = report.rows[idx];
        if (row.status == "ok") {
          out << ' ' << row.inner << " / " << row.outer << " / " << std::fixed
              << std::setprecision(2) << row.time_s << std::defaultfloat << " |";
        } else {
          out << ' ' << row.status << " |";
        }
      }
      out << "\n";
    }
  }
}

}  // namespace sdlcp
