#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdlcp/nt_newton.hpp"
#include "sdlcp/problems.hpp"

namespace sdlcp {

// Step-size selection rule for the inner iteration.
struct StepRule {
  enum class Kind {
    Fixed,               // constant alpha in (0, 1]
    InvLog4Delta,        // 1 / log(4 delta), clamped to 1 when 4 delta <= e
    InvOnePlusLog,       // 1 / (1 + log(4 delta + 1))
    TheoreticalDefault,  // 1 / psi''(rho(2 delta)), the guaranteed-decrease step
  };

  Kind kind = Kind::Fixed;
  double alpha = 0.9;  // used by Fixed only

  static StepRule fixed(double a) { return {Kind::Fixed, a}; }
  static StepRule inv_log_4delta() { return {Kind::InvLog4Delta, 0.0}; }
  static StepRule inv_one_plus_log() { return {Kind::InvOnePlusLog, 0.0}; }
  static StepRule theoretical_default() { return {Kind::TheoreticalDefault, 0.0}; }

  /// Parses "0.5" | "invlog4d" | "inv1plog" | "default".
  static StepRule parse(const std::string& text);
  std::string label() const;
};

// Right-hand side of the scaled Newton system.
//   ClassicalNT:    -psi'_{logbarrier}(V) = V^{-1} - V, the plain centering
//                   direction; the default, and what the benchmark iteration
//                   counts are calibrated against.
//   KernelGradient: -psi'(V) for the configured kernel, the direction family
//                   whose decrease theory the default step size comes from.
enum class DirectionRule { ClassicalNT, KernelGradient };

struct SolverConfig {
  double tau = 2.0;                 // proximity threshold, >= 1
  double eps = 1e-6;                // accuracy target on n mu
  double theta = 0.5;               // barrier update factor in (0, 1)
  std::optional<double> mu0;        // fixed mu0; empty selects Tr(X0 Y0)/n
  StepRule step = StepRule::fixed(0.9);
  std::string kernel = "new";       // proximity kernel: "new" | "logbarrier"
  DirectionRule direction = DirectionRule::ClassicalNT;
  int max_inner_total = 10000;      // cumulative inner iteration cap
  int pd_backtrack_max = 60;        // positivity safeguard halvings
};

// One inner iteration, recorded before the step is taken; the barrier
// decrease (at fixed mu) is filled in when the next proximity evaluation
// becomes available.
struct IterationRecord {
  int outer = 0;
  double mu = 0.0;
  double barrier = 0.0;           // Psi(V) before the step
  double delta = 0.0;             // delta(V) before the step
  double alpha = 0.0;             // step size actually taken
  bool clamped = false;           // a log step rule hit its clamp
  int safeguard_halvings = 0;
  double barrier_decrease = 0.0;  // Psi(V_+) - Psi(V) at the same mu
};

struct SolveReport {
  int inner_total = 0;
  int outer_total = 0;
  double wall_time = 0.0;  // seconds around the iteration loop
  SymmetricMatrix final_x;
  SymmetricMatrix final_y;
  double final_mu = 0.0;
  double feasibility_residual = 0.0;      // ||Y - L(X) - Q||_F at the final iterate
  double max_feasibility_residual = 0.0;  // worst residual over every accepted iterate
  double complementarity = 0.0;           // Tr(X Y)
  std::vector<IterationRecord> trace;
  std::vector<std::string> warnings;
};

/// Runs the interior-point iteration from an explicit strictly feasible
/// pair. Throws InfeasibleStart if (x0, y0) is not strictly feasible or
/// violates Y0 = L(X0) + Q, InitialProximityTooLarge when the trace rule is
/// selected and Psi(V0) > tau, IterationCapExceeded and StepFailure as the
/// corresponding safeguards trip.
SolveReport solve(const SdlcpProblem& p, const SolverConfig& cfg, const SymmetricMatrix& x0,
                  const SymmetricMatrix& y0);

/// Convenience overload starting from the problem's stored x_start with
/// y0 = L(x0) + Q.
SolveReport solve(const SdlcpProblem& p, const SolverConfig& cfg);

/// Evaluates a step rule at proximity delta. Degenerate values are clamped,
/// never raised as errors.
double choose_step(const StepRule& rule, double delta, const KernelFunction& k);

/// Largest alpha' = alpha / 2^j (0 <= j <= max_halvings) with x + alpha' dx
/// and y + alpha' dy both positive definite. Throws StepFailure when the
/// budget is exhausted.
double safeguard_positivity(const SymmetricMatrix& x, const SymmetricMatrix& y,
                            const SymmetricMatrix& dx, const SymmetricMatrix& dy, double alpha,
                            int max_halvings = 60);

struct DecreaseViolation {
  std::size_t index;  // position in the trace
  double observed;    // recorded barrier decrease
  double bound;       // -delta^2 / psi''(rho(2 delta))
};

/// Checks the guaranteed-decrease property on the trace of a
/// TheoreticalDefault run: every iteration with Psi >= 1 must satisfy
/// f(alpha) <= -delta^2 / psi''(rho(2 delta)) + 1e-8. Returns the
/// violations (expected empty).
std::vector<DecreaseViolation> decrease_check(const std::vector<IterationRecord>& trace,
                                              const KernelFunction& k);

/// Number of mu-updates a run will perform: the smallest k with
/// n (1-theta)^k mu0 < eps, evaluated with the same floating-point
/// recurrence the solver uses. Throws ParameterError when n mu0 <= eps.
int predicted_outer_count(int n, double mu0, double eps, double theta);

}  // namespace sdlcp
