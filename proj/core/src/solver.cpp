#include "sdlcp/solver.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace sdlcp {

StepRule StepRule::parse(const std::string& text) {
  if (text == "invlog4d") return inv_log_4delta();
  if (text == "inv1plog") return inv_one_plus_log();
  if (text == "default") return theoretical_default();
  try {
    std::size_t used = 0;
    const double a = std::stod(text, &used);
    if (used != text.size()) throw ParameterError("");
    if (!(a > 0.0 && a <= 1.0)) {
      throw ParameterError("fixed step size must lie in (0, 1], got " + text);
    }
    return fixed(a);
  } catch (const std::logic_error&) {
    throw ParameterError("cannot parse step rule '" + text +
                         "' (number or invlog4d | inv1plog | default)");
  }
}

std::string StepRule::label() const {
  switch (kind) {
    case Kind::Fixed: {
      std::ostringstream os;
      os << alpha;
      return os.str();
    }
    case Kind::InvLog4Delta: return "invlog4d";
    case Kind::InvOnePlusLog: return "inv1plog";
    case Kind::TheoreticalDefault: return "default";
  }
  return "?";
}

namespace {

struct StepChoice {
  double alpha;
  bool clamped;
};

StepChoice choose_step_impl(const StepRule& rule, double delta, const KernelFunction& k) {
  switch (rule.kind) {
    case StepRule::Kind::Fixed:
      return {rule.alpha, false};
    case StepRule::Kind::InvLog4Delta:
      // 1/log(4 delta) is undefined for 4 delta <= 1 and exceeds 1 below
      // 4 delta = e; both regimes collapse to a full step.
      if (4.0 * delta <= std::exp(1.0)) return {1.0, true};
      return {1.0 / std::log(4.0 * delta), false};
    case StepRule::Kind::InvOnePlusLog:
      return {1.0 / (1.0 + std::log(4.0 * delta + 1.0)), false};
    case StepRule::Kind::TheoreticalDefault:
      if (delta == 0.0) return {1.0 / k.d2psi(1.0), false};  // rho(0) = 1
      return {default_step(delta, k), false};
  }
  throw ParameterError("unknown step rule");
}

void validate_config(const SolverConfig& cfg) {
  if (!(cfg.theta > 0.0 && cfg.theta < 1.0)) {
    throw ParameterError("theta must lie in (0, 1)");
  }
  if (!(cfg.tau >= 1.0)) throw ParameterError("tau must be >= 1");
  if (!(cfg.eps > 0.0)) throw ParameterError("eps must be > 0");
  if (cfg.mu0 && !(*cfg.mu0 > 0.0)) throw ParameterError("mu0 must be > 0");
  if (cfg.step.kind == StepRule::Kind::Fixed &&
      !(cfg.step.alpha > 0.0 && cfg.step.alpha <= 1.0)) {
    throw ParameterError("fixed step size must lie in (0, 1]");
  }
  if (cfg.max_inner_total < 0 || cfg.pd_backtrack_max < 0) {
    throw ParameterError("iteration caps must be non-negative");
  }
  kernel_by_name(cfg.kernel);  // rejects unknown names early
}

}  // namespace

double choose_step(const StepRule& rule, double delta, const KernelFunction& k) {
  return choose_step_impl(rule, delta, k).alpha;
}

double safeguard_positivity(const SymmetricMatrix& x, const SymmetricMatrix& y,
                            const SymmetricMatrix& dx, const SymmetricMatrix& dy, double alpha,
                            int max_halvings) {
  if (!(alpha > 0.0)) throw ParameterError("safeguard requires alpha > 0");
  double a = alpha;
  for (int j = 0; j <= max_halvings; j++, a *= 0.5) {
    if (is_positive_definite(x + a * dx) && is_positive_definite(y + a * dy)) return a;
  }
  throw StepFailure("positivity safeguard exhausted after " + std::to_string(max_halvings) +
                    " halvings");
}

SolveReport solve(const SdlcpProblem& p, const SolverConfig& cfg, const SymmetricMatrix& x0,
                  const SymmetricMatrix& y0) {
  validate_config(cfg);
  const int n = p.n;
  if (x0.dim() != n || y0.dim() != n) {
    throw DimensionMismatch("start dimension does not match problem");
  }
  if (!is_positive_definite(x0)) throw InfeasibleStart("X0 is not positive definite");
  if (!is_positive_definite(y0)) throw InfeasibleStart("Y0 is not positive definite");
  const double feas0 = fro_norm(y0 - p.l.apply(x0) - p.q);
  if (feas0 > 1e-8 * (1.0 + fro_norm(p.q))) {
    throw InfeasibleStart("Y0 != L(X0) + Q (residual " + std::to_string(feas0) + ")");
  }

  const KernelFunction prox_kernel = kernel_by_name(cfg.kernel);
  const KernelFunction dir_kernel = cfg.direction == DirectionRule::ClassicalNT
                                        ? log_barrier_kernel()
                                        : prox_kernel;

  const double mu0 = cfg.mu0 ? *cfg.mu0 : inner(x0, y0) / n;

  SolveReport report;
  report.final_x = x0;
  report.final_y = y0;
  report.final_mu = mu0;
  report.max_feasibility_residual = feas0;

  const bool will_iterate = n * mu0 >= cfg.eps;
  if (will_iterate) {
    const NTScaling nt0 = compute_nt_scaling(x0, y0, mu0);
    const double psi0 = barrier(nt0.v, prox_kernel);
    if (psi0 > cfg.tau) {
      if (!cfg.mu0) {
        throw InitialProximityTooLarge("Psi(V0) = " + std::to_string(psi0) + " > tau = " +
                                       std::to_string(cfg.tau) + " under the trace rule");
      }
      report.warnings.push_back("initial proximity " + std::to_string(psi0) +
                                " exceeds tau; fixed mu0 run continues");
    }
  }

  SymmetricMatrix x = x0;
  SymmetricMatrix y = y0;
  double mu = mu0;

  const auto t_begin = std::chrono::steady_clock::now();
  std::optional<IterationRecord> pending;

  while (n * mu >= cfg.eps) {
    mu *= (1.0 - cfg.theta);
    report.outer_total++;
    pending.reset();  // decreases are only meaningful at fixed mu

    for (;;) {
      const NTScaling nt = compute_nt_scaling(x, y, mu);
      const ProximityReport prox = proximity_delta(nt.v, prox_kernel);
      if (pending) {
        pending->barrier_decrease = prox.barrier - pending->barrier;
        report.trace.push_back(*pending);
        pending.reset();
      }
      if (prox.barrier <= cfg.tau) break;

      const ScaledDirections dirs = solve_scaled_newton(nt, p.l, dir_kernel);
      const StepChoice choice = choose_step_impl(cfg.step, prox.delta, prox_kernel);
      const double alpha =
          safeguard_positivity(x, y, dirs.delta_x, dirs.delta_y, choice.alpha,
                               cfg.pd_backtrack_max);

      IterationRecord rec;
      rec.outer = report.outer_total;
      rec.mu = mu;
      rec.barrier = prox.barrier;
      rec.delta = prox.delta;
      rec.alpha = alpha;
      rec.clamped = choice.clamped;
      rec.safeguard_halvings =
          static_cast<int>(std::lround(std::log2(choice.alpha / alpha)));
      pending = rec;

      x += alpha * dirs.delta_x;
      y += alpha * dirs.delta_y;

      report.max_feasibility_residual =
          std::max(report.max_feasibility_residual, fro_norm(y - p.l.apply(x) - p.q));

      report.inner_total++;
      if (report.inner_total > cfg.max_inner_total) {
        throw IterationCapExceeded("inner iteration cap " +
                                   std::to_string(cfg.max_inner_total) + " exceeded");
      }
    }
  }

  const auto t_end = std::chrono::steady_clock::now();
  report.wall_time = std::chrono::duration<double>(t_end - t_begin).count();
  report.final_x = x;
  report.final_y = y;
  report.final_mu = mu;
  report.feasibility_residual = fro_norm(y - p.l.apply(x) - p.q);
  report.complementarity = inner(x, y);
  return report;
}

SolveReport solve(const SdlcpProblem& p, const SolverConfig& cfg) {
  if (!p.x_start) {
    throw ParameterError("problem '" + p.name + "' carries no stored starting point");
  }
  return solve(p, cfg, *p.x_start, p.l.apply(*p.x_start) + p.q);
}

std::vector<DecreaseViolation> decrease_check(const std::vector<IterationRecord>& trace,
                                              const KernelFunction& k) {
  std::vector<DecreaseViolation> violations;
  for (std::size_t i = 0; i < trace.size(); i++) {
    const auto& rec = trace[i];
    if (rec.barrier < 1.0) continue;
    const double bound = -rec.delta * rec.delta / k.d2psi(rho(2.0 * rec.delta, k));
    if (rec.barrier_decrease > bound + 1e-8) {
      violations.push_back({i, rec.barrier_decrease, bound});
    }
  }
  return violations;
}

int predicted_outer_count(int n, double mu0, double eps, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw ParameterError("theta must lie in (0, 1)");
  if (!(eps > 0.0) || !(mu0 > 0.0) || n < 1 || static_cast<double>(n) * mu0 <= eps) {
    throw ParameterError("predicted_outer_count requires n mu0 > eps > 0");
  }
  // same recurrence as the solver loop, so counts agree bit for bit
  int k = 0;
  double mu = mu0;
  while (static_cast<double>(n) * mu >= eps) {
    mu *= (1.0 - theta);
    k++;
  }
  return k;
}

}  // namespace sdlcp
