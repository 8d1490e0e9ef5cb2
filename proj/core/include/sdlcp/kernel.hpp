#pragma once

#include <functional>
#include <string>

#include "sdlcp/symmat.hpp"

namespace sdlcp {

// A kernel function: a strictly convex barrier psi on t > 0, normalized by
// psi(1) = psi'(1) = 0 and blowing up at both ends of the domain, together
// with its first three derivatives. Lifted to S^n through eigenvalues.
struct KernelFunction {
  std::string name;
  std::function<double(double)> psi;
  std::function<double(double)> dpsi;
  std::function<double(double)> d2psi;
  std::function<double(double)> d3psi;
};

/// The kernel psi(t) = (2t^2 + 1/t^2 - 5)/2 + e^{1/t - 1}. Its gradient
/// grows linearly at infinity and exponentially at zero, which is what
/// drives the favourable barrier-update behaviour.
KernelFunction new_kernel();

/// Classical log-barrier kernel psi(t) = (t^2 - 1)/2 - log t, the baseline
/// whose gradient is t - 1/t (so -psi'(V) = V^{-1} - V).
KernelFunction log_barrier_kernel();

/// Lookup by the names used in config files: "new" | "logbarrier".
KernelFunction kernel_by_name(const std::string& name);

struct ProximityReport {
  double barrier;     // Psi(V) = Tr(psi(V)) >= 0
  double delta;       // 0.5 * ||psi'(V)||_F >= 0
  double lambda_min;  // smallest eigenvalue of V
};

/// Barrier value Psi(V) = sum_i psi(lambda_i(V)).
/// Throws NotPositiveDefinite when V is not in the cone interior.
double barrier(const SymmetricMatrix& v, const KernelFunction& k);

/// Proximity measure delta(V) = 0.5 * sqrt(sum_i psi'(lambda_i)^2),
/// reported together with the barrier and the eigenvalue floor.
ProximityReport proximity_delta(const SymmetricMatrix& v, const KernelFunction& k);

/// Inverse of t -> -psi'(t)/2 restricted to (0, 1]; monotonically
/// decreasing with rho(0) = 1. Bisection with the bracket seeded from
/// t >= 1/(1 + log(4s + 1)).
double rho(double s, const KernelFunction& k);

/// Inverse of psi on [1, infinity); varrho(0) = 1 and
/// sqrt(1 + s) <= varrho(s) <= 1 + sqrt(2 s).
double varrho(double s, const KernelFunction& k);

/// Guaranteed-decrease step size 1 / psi''(rho(2 delta)).
double default_step(double delta, const KernelFunction& k);

/// Barrier bound after a mu-update: (2 / (1 - theta)) (sqrt(2 tau) + sqrt(n) theta)^2.
double psi0_bound(double tau, double theta, int n);

/// Inner-iteration bound per outer iteration:
/// 66 (1 + log(2 sqrt(2 psi0) + 1))^2 sqrt(psi0). Natural logarithm.
double inner_bound(double psi0);

/// Total iteration bound: inner_bound(psi0_bound(tau, theta, n)) * (1/theta) * log(n mu0 / eps).
double total_bound(int n, double mu0, double eps, double theta, double tau);

}  // namespace sdlcp
