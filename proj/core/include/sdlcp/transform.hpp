#pragma once

#include <cstdint>

#include "sdlcp/symmat.hpp"

namespace sdlcp {

// Linear transformation L : S^n -> S^n, the left-hand side of the
// complementarity constraint Y = L(X) + Q. Three representations:
//   TwoSided(A)   L(X) = A X A^T            (A any square matrix)
//   Lyapunov(M)   L(X) = (M X + X M) / 2    (M symmetric)
//   Custom(Mhat)  L(X) = smat(Mhat svec(X)) (Mhat dense in the svec basis)
class LinearTransformation {
 public:
  enum class Kind { TwoSided, Lyapunov, Custom };

  static LinearTransformation two_sided(Matrix a);
  static LinearTransformation lyapunov(SymmetricMatrix m);
  static LinearTransformation custom(Matrix svec_op);

  Kind kind() const { return kind_; }
  int dim() const { return n_; }

  /// Applies the transformation; the result is re-symmetrized.
  SymmetricMatrix apply(const SymmetricMatrix& x) const;

  /// Kind-specific payload: A, the dense M, or the svec-basis operator.
  const Matrix& data() const { return a_; }

  /// Sampled monotonicity certificate: the minimum of
  /// inner(U, L(U)) / ||U||_F^2 over `samples` seeded random symmetric U.
  /// Monotone transformations stay >= -1e-9.
  double monotonicity_certificate(int samples = 100, std::uint64_t seed = 0x5d1c9ULL) const;

 private:
  LinearTransformation(Kind kind, int n, Matrix a) : kind_(kind), n_(n), a_(std::move(a)) {}

  Kind kind_;
  int n_;
  Matrix a_;
};

}  // namespace sdlcp
