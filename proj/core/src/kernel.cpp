#include "sdlcp/kernel.hpp"

#include <cmath>

namespace sdlcp {

namespace {

void require_positive(double t, const char* who) {
  if (!(t > 0.0)) {
    throw DomainError(std::string(who) + " evaluated at t = " + std::to_string(t) + " <= 0");
  }
}

}  // namespace

KernelFunction new_kernel() {
  KernelFunction k;
  k.name = "new";
  k.psi = [](double t) {
    require_positive(t, "psi");
    return 0.5 * (2.0 * t * t + 1.0 / (t * t) - 5.0) + std::exp(1.0 / t - 1.0);
  };
  k.dpsi = [](double t) {
    require_positive(t, "psi'");
    const double t2 = t * t;
    return 2.0 * t - 1.0 / (t2 * t) - std::exp(1.0 / t - 1.0) / t2;
  };
  k.d2psi = [](double t) {
    require_positive(t, "psi''");
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double t4 = t2 * t2;
    return 2.0 + 3.0 / t4 + (2.0 / t3 + 1.0 / t4) * std::exp(1.0 / t - 1.0);
  };
  k.d3psi = [](double t) {
    require_positive(t, "psi'''");
    const double t4 = t * t * t * t;
    const double t5 = t4 * t;
    const double t6 = t5 * t;
    return -12.0 / t5 - (6.0 / t5 + 1.0 / t6 + 6.0 / t4) * std::exp(1.0 / t - 1.0);
  };
  return k;
}

KernelFunction log_barrier_kernel() {
  KernelFunction k;
  k.name = "logbarrier";
  k.psi = [](double t) {
    require_positive(t, "psi");
    return 0.5 * (t * t - 1.0) - std::log(t);
  };
  k.dpsi = [](double t) {
    require_positive(t, "psi'");
    return t - 1.0 / t;
  };
  k.d2psi = [](double t) {
    require_positive(t, "psi''");
    return 1.0 + 1.0 / (t * t);
  };
  k.d3psi = [](double t) {
    require_positive(t, "psi'''");
    return -2.0 / (t * t * t);
  };
  return k;
}

KernelFunction kernel_by_name(const std::string& name) {
  if (name == "new") return new_kernel();
  if (name == "logbarrier") return log_barrier_kernel();
  throw ParameterError("unknown kernel '" + name + "' (expected \"new\" or \"logbarrier\")");
}

namespace {

std::vector<double> cone_eigenvalues(const SymmetricMatrix& v) {
  auto lambda = spectral_decompose(v).lambda;
  const double tol = pd_tolerance(v);
  if (lambda.back() <= tol) {
    throw NotPositiveDefinite("barrier argument has min eigenvalue " +
                              std::to_string(lambda.back()));
  }
  return lambda;
}

}  // namespace

double barrier(const SymmetricMatrix& v, const KernelFunction& k) {
  double sum = 0.0;
  for (double t : cone_eigenvalues(v)) sum += k.psi(t);
  return sum;
}

ProximityReport proximity_delta(const SymmetricMatrix& v, const KernelFunction& k) {
  const auto lambda = cone_eigenvalues(v);
  ProximityReport r{};
  r.lambda_min = lambda.back();
  double sq = 0.0;
  for (double t : lambda) {
    r.barrier += k.psi(t);
    const double g = k.dpsi(t);
    sq += g * g;
  }
  r.delta = 0.5 * std::sqrt(sq);
  return r;
}

double rho(double s, const KernelFunction& k) {
  if (s < 0.0) throw ParameterError("rho requires s >= 0");
  if (s == 0.0) return 1.0;
  const auto g = [&](double t) { return -0.5 * k.dpsi(t); };  // decreasing on (0,1]

  double lo = std::min(1.0 / (1.0 + std::log(4.0 * s + 1.0)), 0.5);
  int guard = 0;
  while (g(lo) < s) {
    lo *= 0.5;
    if (++guard > 2000) throw BracketFailure("rho: no lower bracket for s = " + std::to_string(s));
  }
  double hi = 1.0;

  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; it++) {
    mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // interval collapsed to adjacent doubles
    const double val = g(mid);
    if (std::fabs(val - s) <= 1e-13 * (1.0 + s)) break;
    if (val > s) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

double varrho(double s, const KernelFunction& k) {
  if (s < 0.0) throw ParameterError("varrho requires s >= 0");
  if (s == 0.0) return 1.0;

  double lo = 1.0;
  double hi = 1.0 + std::sqrt(2.0 * s) + 1e-9;
  int guard = 0;
  while (k.psi(hi) < s) {  // psi(t) >= (t-1)^2/2 makes this a no-op for valid kernels
    hi = 1.0 + 2.0 * (hi - 1.0);
    if (++guard > 2000) throw BracketFailure("varrho: no upper bracket for s = " + std::to_string(s));
  }

  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; it++) {
    mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double val = k.psi(mid);
    if (std::fabs(val - s) <= 1e-13 * (1.0 + s)) break;
    if (val < s) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

double default_step(double delta, const KernelFunction& k) {
  if (!(delta > 0.0)) throw ParameterError("default_step requires delta > 0");
  return 1.0 / k.d2psi(rho(2.0 * delta, k));
}

double psi0_bound(double tau, double theta, int n) {
  if (!(theta > 0.0 && theta < 1.0)) throw ParameterError("psi0_bound requires theta in (0,1)");
  if (!(tau >= 1.0)) throw ParameterError("psi0_bound requires tau >= 1");
  if (n < 1) throw ParameterError("psi0_bound requires n >= 1");
  const double root = std::sqrt(2.0 * tau) + std::sqrt(static_cast<double>(n)) * theta;
  return 2.0 / (1.0 - theta) * root * root;
}

double inner_bound(double psi0) {
  if (!(psi0 > 0.0)) throw ParameterError("inner_bound requires psi0 > 0");
  const double l = 1.0 + std::log(2.0 * std::sqrt(2.0 * psi0) + 1.0);
  return 66.0 * l * l * std::sqrt(psi0);
}

double total_bound(int n, double mu0, double eps, double theta, double tau) {
  if (!(eps > 0.0) || !(mu0 > 0.0)) throw ParameterError("total_bound requires mu0, eps > 0");
  if (static_cast<double>(n) * mu0 <= eps) {
    throw ParameterError("total_bound degenerate: n * mu0 <= eps");
  }
  return inner_bound(psi0_bound(tau, theta, n)) / theta *
         std::log(static_cast<double>(n) * mu0 / eps);
}

}  // namespace sdlcp
