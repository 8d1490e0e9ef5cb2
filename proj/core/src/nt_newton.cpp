#include "sdlcp/nt_newton.hpp"

#include <cmath>

namespace sdlcp {

NTScaling compute_nt_scaling(const SymmetricMatrix& x, const SymmetricMatrix& y, double mu) {
  if (x.dim() != y.dim()) throw DimensionMismatch("nt scaling: X and Y dimensions differ");
  if (!(mu > 0.0)) throw ParameterError("nt scaling requires mu > 0");

  const SymmetricMatrix xs = sqrt_pd(x);            // throws if X left the cone
  const SymmetricMatrix mid = sandwich(xs, y);      // X^{1/2} Y X^{1/2}
  const SymmetricMatrix mid_inv_sqrt = inv_pd(sqrt_pd(mid));  // throws if Y left the cone

  NTScaling nt;
  nt.mu = mu;
  nt.p = sandwich(xs, mid_inv_sqrt);
  nt.d = sqrt_pd(nt.p);
  nt.d_inv = inv_pd(nt.d);
  nt.v = (1.0 / std::sqrt(mu)) * sandwich(nt.d_inv, x);
  return nt;
}

Matrix ScaledOperator::svec_matrix() const {
  const int m = svec_size(dim());
  Matrix op(m, m);
  std::vector<double> unit(m, 0.0);
  for (int k = 0; k < m; k++) {
    unit[k] = 1.0;
    const auto col = svec(apply(smat(unit)));
    unit[k] = 0.0;
    for (int i = 0; i < m; i++) op(i, k) = col[i];
  }
  return op;
}

ScaledDirections solve_scaled_newton(const NTScaling& nt, const LinearTransformation& l,
                                     const KernelFunction& k) {
  const int n = nt.v.dim();
  if (l.dim() != n) throw DimensionMismatch("newton solve: transform dimension mismatch");
  const int m = svec_size(n);

  const ScaledOperator op(l, nt.d);

  // system matrix I + L~ in the svec basis
  Matrix sys = op.svec_matrix();
  for (int i = 0; i < m; i++) sys(i, i) += 1.0;

  const SymmetricMatrix grad = apply_scalar_function(nt.v, k.dpsi);
  std::vector<double> rhs = svec(grad);
  for (double& v : rhs) v = -v;

  ScaledDirections dirs;
  dirs.dx = smat(lu_solve(std::move(sys), std::move(rhs)));
  dirs.dy = op.apply(dirs.dx);
  const double root_mu = std::sqrt(nt.mu);
  dirs.delta_x = root_mu * sandwich(nt.d, dirs.dx);
  dirs.delta_y = root_mu * sandwich(nt.d_inv, dirs.dy);
  return dirs;
}

}  // namespace sdlcp
