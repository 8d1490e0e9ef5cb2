#include "sdlcp/transform.hpp"

#include <cmath>

#include "sdlcp/detail/rng.hpp"

namespace sdlcp {

LinearTransformation LinearTransformation::two_sided(Matrix a) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw DimensionMismatch("two_sided requires a square matrix");
  }
  const int n = a.rows();
  return LinearTransformation(Kind::TwoSided, n, std::move(a));
}

LinearTransformation LinearTransformation::lyapunov(SymmetricMatrix m) {
  const int n = m.dim();
  return LinearTransformation(Kind::Lyapunov, n, m.matrix());
}

LinearTransformation LinearTransformation::custom(Matrix svec_op) {
  if (svec_op.rows() != svec_op.cols()) {
    throw DimensionMismatch("custom transform requires a square svec-basis matrix");
  }
  // recover n from m = n(n+1)/2
  const int m = svec_op.rows();
  const int n = static_cast<int>((std::sqrt(8.0 * m + 1.0) - 1.0) / 2.0 + 0.5);
  if (n < 1 || svec_size(n) != m) {
    throw DimensionMismatch("custom transform size is not a triangular number");
  }
  return LinearTransformation(Kind::Custom, n, std::move(svec_op));
}

SymmetricMatrix LinearTransformation::apply(const SymmetricMatrix& x) const {
  if (x.dim() != n_) {
    throw DimensionMismatch("transform expects dimension " + std::to_string(n_) + ", got " +
                            std::to_string(x.dim()));
  }
  switch (kind_) {
    case Kind::TwoSided:
      return SymmetricMatrix::symmetrized(a_ * x.matrix() * a_.transposed());
    case Kind::Lyapunov:
      return SymmetricMatrix::symmetrized(0.5 * (a_ * x.matrix() + x.matrix() * a_));
    case Kind::Custom: {
      const auto vx = svec(x);
      std::vector<double> out(vx.size(), 0.0);
      for (int i = 0; i < a_.rows(); i++) {
        double s = 0.0;
        for (int j = 0; j < a_.cols(); j++) s += a_(i, j) * vx[j];
        out[i] = s;
      }
      return smat(out);
    }
  }
  throw Error("Internal", "unreachable transform kind");
}

double LinearTransformation::monotonicity_certificate(int samples, std::uint64_t seed) const {
  detail::Rng rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; s++) {
    SymmetricMatrix u(n_);
    for (int i = 0; i < n_; i++)
      for (int j = i; j < n_; j++) u.set(i, j, rng.uniform_sym());
    const double nu2 = inner(u, u);
    if (nu2 == 0.0) continue;
    worst = std::min(worst, inner(u, apply(u)) / nu2);
  }
  return worst;
}

}  // namespace sdlcp
