#pragma once

#include "sdlcp/kernel.hpp"
#include "sdlcp/transform.hpp"

namespace sdlcp {

// Nesterov-Todd scaling of a strictly feasible pair (X, Y) at barrier
// parameter mu: the scaling point P maps X and Y to the common matrix
//   V = (1/sqrt(mu)) D^-1 X D^-1 = (1/sqrt(mu)) D Y D,   D = P^{1/2},
// so that V^2 is similar to (1/mu) X Y.
struct NTScaling {
  SymmetricMatrix p;
  SymmetricMatrix d;
  SymmetricMatrix d_inv;
  SymmetricMatrix v;
  double mu = 0.0;
};

/// P = X^{1/2} (X^{1/2} Y X^{1/2})^{-1/2} X^{1/2} and the derived D, V.
/// Throws NotPositiveDefinite when an iterate has left the cone interior.
NTScaling compute_nt_scaling(const SymmetricMatrix& x, const SymmetricMatrix& y, double mu);

// The scaled transformation U -> D L(D U D) D. Monotone whenever L is.
class ScaledOperator {
 public:
  ScaledOperator(const LinearTransformation& l, SymmetricMatrix d)
      : l_(l), d_(std::move(d)) {}

  SymmetricMatrix apply(const SymmetricMatrix& u) const {
    return sandwich(d_, l_.apply(sandwich(d_, u)));
  }

  /// Dense representation in the svec basis (columns are svec of the
  /// operator applied to the basis elements).
  Matrix svec_matrix() const;

  int dim() const { return d_.dim(); }

 private:
  LinearTransformation l_;
  SymmetricMatrix d_;
};

inline ScaledOperator build_scaled_operator(const LinearTransformation& l,
                                            const SymmetricMatrix& d) {
  return ScaledOperator(l, d);
}

// Solution of the scaled Newton system
//   dx + dy = -psi'(V),  dy = D L(D dx D) D,
// solved for dx in the svec basis, together with the unscaled directions
//   delta_x = sqrt(mu) D dx D,  delta_y = sqrt(mu) D^-1 dy D^-1.
struct ScaledDirections {
  SymmetricMatrix dx;
  SymmetricMatrix dy;
  SymmetricMatrix delta_x;
  SymmetricMatrix delta_y;
};

/// Assembles (I + L~) densely in the svec basis and solves. Throws
/// SingularSystem if the factorization breaks down, which signals a
/// non-monotone transformation.
ScaledDirections solve_scaled_newton(const NTScaling& nt, const LinearTransformation& l,
                                     const KernelFunction& k);

}  // namespace sdlcp
