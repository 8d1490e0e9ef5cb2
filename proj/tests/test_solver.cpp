#include <doctest.h>

#include <cmath>

#include "sdlcp/solver.hpp"

using namespace sdlcp;

TEST_CASE("choose_step rules") {
  const auto k = new_kernel();
  CHECK(choose_step(StepRule::fixed(0.7), 123.0, k) == 0.7);
  CHECK(choose_step(StepRule::inv_one_plus_log(), 0.0, k) == doctest::Approx(1.0));
  CHECK(choose_step(StepRule::inv_one_plus_log(), 1.0, k) ==
        doctest::Approx(1.0 / (1.0 + std::log(5.0))));
  CHECK(choose_step(StepRule::theoretical_default(), 0.0, k) == doctest::Approx(0.125));
  // clamp region: 4 delta <= e substitutes a full step
  CHECK(choose_step(StepRule::inv_log_4delta(), 0.5, k) == 1.0);
  CHECK(choose_step(StepRule::inv_log_4delta(), std::exp(1.0) / 4.0, k) == 1.0);
  CHECK(choose_step(StepRule::inv_log_4delta(), 10.0, k) == doctest::Approx(1.0 / std::log(40.0)));
}

TEST_CASE("step rule parsing and labels") {
  CHECK(StepRule::parse("0.5").kind == StepRule::Kind::Fixed);
  CHECK(StepRule::parse("0.5").alpha == 0.5);
  CHECK(StepRule::parse("invlog4d").kind == StepRule::Kind::InvLog4Delta);
  CHECK(StepRule::parse("inv1plog").kind == StepRule::Kind::InvOnePlusLog);
  CHECK(StepRule::parse("default").kind == StepRule::Kind::TheoreticalDefault);
  CHECK(StepRule::parse("0.5").label() == "0.5");
  CHECK(StepRule::parse("default").label() == "default");
  CHECK_THROWS_AS(StepRule::parse("1.5"), ParameterError);
  CHECK_THROWS_AS(StepRule::parse("fast"), ParameterError);
}

TEST_CASE("positivity safeguard") {
  const auto x = SymmetricMatrix::identity(3);
  const auto y = SymmetricMatrix::identity(3);
  const SymmetricMatrix zero(3);
  CHECK(safeguard_positivity(x, y, zero, zero, 0.8) == 0.8);

  // x + a dx = (1 - 2a) I is positive definite iff a < 1/2
  SymmetricMatrix dx = -2.0 * SymmetricMatrix::identity(3);
  CHECK(safeguard_positivity(x, y, dx, zero, 1.0) == doctest::Approx(0.25));

  // already-safe steps are untouched
  CHECK(safeguard_positivity(x, y, dx, zero, 0.3) == 0.3);

  // too small a halving budget exhausts the safeguard (alpha = 1, 0.5 both land
  // outside the cone)
  CHECK_THROWS_AS(safeguard_positivity(SymmetricMatrix::diagonal({1.0, 1.0}), y,
                                       -2.0 * SymmetricMatrix::identity(2), zero, 1.0, 1),
                  StepFailure);
  CHECK_THROWS_AS(safeguard_positivity(x, y, zero, zero, 0.0), ParameterError);
}

TEST_CASE("predicted_outer_count matches the published mu schedules") {
  CHECK(predicted_outer_count(5, 0.0005, 1e-6, 0.5) == 12);
  CHECK(predicted_outer_count(5, 0.0005, 1e-6, 0.89) == 4);
  CHECK(predicted_outer_count(5, 0.0005, 1e-6, 0.95) == 3);
  CHECK_THROWS_AS(predicted_outer_count(5, 1e-9, 1e-6, 0.5), ParameterError);
  CHECK_THROWS_AS(predicted_outer_count(5, 0.0005, 1e-6, 1.0), ParameterError);
}

TEST_CASE("a start below the accuracy target returns immediately") {
  const auto p = example1();
  SolverConfig cfg;
  cfg.mu0 = 1e-9;  // n mu0 < eps
  const auto r = solve(p, cfg);
  CHECK(r.inner_total == 0);
  CHECK(r.outer_total == 0);
  CHECK(fro_norm(r.final_x - *p.x_start) == 0.0);
  CHECK(r.trace.empty());
}

TEST_CASE("infeasible starts are rejected") {
  const auto p = example1();
  SolverConfig cfg;
  const auto x0 = *p.x_start;
  const auto y0 = p.l.apply(x0) + p.q;
  CHECK_THROWS_AS(solve(p, cfg, x0, y0 + 0.1 * SymmetricMatrix::identity(5)), InfeasibleStart);
  CHECK_THROWS_AS(solve(p, cfg, SymmetricMatrix::diagonal({1, 1, 1, 1, -1}), y0), InfeasibleStart);
}

TEST_CASE("config validation") {
  const auto p = example1();
  SolverConfig cfg;
  cfg.theta = 1.0;
  CHECK_THROWS_AS(solve(p, cfg), ParameterError);
  cfg = {};
  cfg.tau = 0.5;
  CHECK_THROWS_AS(solve(p, cfg), ParameterError);
  cfg = {};
  cfg.step = StepRule::fixed(1.5);
  CHECK_THROWS_AS(solve(p, cfg), ParameterError);
  cfg = {};
  cfg.kernel = "unknown";
  CHECK_THROWS_AS(solve(p, cfg), ParameterError);
}

TEST_CASE("iteration cap trips as an error") {
  const auto p = example1();
  SolverConfig cfg;
  cfg.mu0 = 0.0005;
  cfg.step = StepRule::fixed(0.3);
  cfg.max_inner_total = 3;
  CHECK_THROWS_AS(solve(p, cfg), IterationCapExceeded);
}

TEST_CASE("published iteration counts are reproduced") {
  const auto p = example1();

  SolverConfig cfg;
  cfg.theta = 0.95;
  cfg.mu0 = 0.0005;
  cfg.step = StepRule::fixed(1.0);
  auto r = solve(p, cfg);
  CHECK(r.inner_total == 6);
  CHECK(r.outer_total == 3);

  cfg.theta = 0.5;
  cfg.step = StepRule::fixed(0.5);
  r = solve(p, cfg);
  CHECK(r.outer_total == 12);
  CHECK(std::abs(r.inner_total - 35) <= 2);

  // outer counts equal the mu-schedule prediction on completed runs
  for (double theta : {0.5, 0.89, 0.95}) {
    SolverConfig c;
    c.theta = theta;
    c.mu0 = 0.005;
    c.step = StepRule::fixed(0.9);
    const auto rr = solve(p, c);
    CHECK(rr.outer_total == predicted_outer_count(p.n, 0.005, c.eps, theta));
    CHECK(rr.complementarity >= -1e-9);
    CHECK(p.n * rr.final_mu < c.eps);
  }
}

TEST_CASE("feasibility and positivity hold at the returned iterate") {
  for (const char* name : {"example1", "example2", "example3"}) {
    const auto p = problem_by_name(name);
    SolverConfig cfg;
    cfg.step = StepRule::fixed(0.9);
    const auto r = solve(p, cfg);
    CHECK(r.feasibility_residual <= 1e-7 * (1.0 + fro_norm(p.q)));
    CHECK(is_positive_definite(r.final_x));
    CHECK(is_positive_definite(r.final_y));
    CHECK(r.complementarity <= p.n * 1e-6 * 10.0);
    CHECK(r.outer_total == static_cast<int>(r.trace.empty() ? r.outer_total : r.trace.back().outer));
  }
}

TEST_CASE("solutions approach the published reference iterates") {
  SolverConfig cfg;
  cfg.theta = 0.5;
  cfg.mu0 = 0.0005;
  cfg.step = StepRule::fixed(0.5);
  for (const auto& p : {example1(), example2()}) {
    const auto r = solve(p, cfg);
    double max_diff = 0.0;
    for (int i = 0; i < p.n; i++)
      for (int j = 0; j < p.n; j++) {
        max_diff = std::max(max_diff, std::fabs(r.final_x(i, j) - (*p.x_ref)(i, j)));
      }
    CHECK(max_diff <= 1e-3);
  }
}

TEST_CASE("trace records reconstruct the run") {
  const auto p = example1();
  SolverConfig cfg;
  cfg.theta = 0.89;
  cfg.mu0 = 0.0005;
  cfg.step = StepRule::fixed(0.7);
  const auto r = solve(p, cfg);
  CHECK(static_cast<int>(r.trace.size()) == r.inner_total);
  for (const auto& rec : r.trace) {
    CHECK(rec.barrier > cfg.tau);  // a step only happens above the threshold
    CHECK(rec.alpha == 0.7);       // safeguard never fires on this run
    CHECK(rec.delta > 0.0);
    CHECK(rec.mu > 0.0);
  }
}

TEST_CASE("kernel-gradient direction with the guaranteed step decreases the barrier") {
  const auto p = example1();
  const auto k = new_kernel();
  SolverConfig cfg;
  cfg.theta = 0.89;
  cfg.step = StepRule::theoretical_default();
  cfg.direction = DirectionRule::KernelGradient;
  cfg.max_inner_total = 100000;
  const auto r = solve(p, cfg);
  CHECK(r.inner_total > 0);

  // within every inner loop the barrier never increases
  for (const auto& rec : r.trace) CHECK(rec.barrier_decrease <= 1e-10);

  // and the guaranteed-decrease inequality holds wherever it applies
  CHECK(decrease_check(r.trace, k).empty());

  // a doctored trace is flagged
  auto doctored = r.trace;
  bool flagged = false;
  for (auto& rec : doctored) {
    if (rec.barrier >= 1.0) {
      rec.barrier_decrease = 0.0;
      flagged = true;
      break;
    }
  }
  REQUIRE(flagged);
  CHECK_FALSE(decrease_check(doctored, k).empty());
}

TEST_CASE("trace-rule initial proximity guard") {
  // an eccentric feasible start fails the Psi <= tau requirement under the
  // trace rule but only warns when mu0 is fixed by hand
  auto p = random_monotone(3, 123);
  const auto x0 = SymmetricMatrix::diagonal({40.0, 0.025, 1.0});
  p.q = SymmetricMatrix::identity(3) - p.l.apply(x0);  // y0 = I, eccentric against x0
  p.x_start = x0;

  SolverConfig cfg;
  CHECK_THROWS_AS(solve(p, cfg), InitialProximityTooLarge);

  cfg.mu0 = 0.5;
  cfg.eps = 1e-2;  // a short run; only the warning is of interest here
  cfg.step = StepRule::fixed(0.5);
  const auto r = solve(p, cfg);
  CHECK_FALSE(r.warnings.empty());
}
