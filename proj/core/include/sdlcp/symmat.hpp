#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

#include "sdlcp/errors.hpp"

namespace sdlcp {

// Dense row-major matrix. General rectangular storage; this is the
// workhorse behind SymmetricMatrix and the problem data (which includes
// non-square factors).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}
  Matrix(int rows, int cols, std::vector<double> data);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix transposed() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(double s);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }

  const std::vector<double>& data() const { return a_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

// Element of S^n, the space of real symmetric n x n matrices. Symmetry is
// maintained by construction: mutation goes through set(), and every
// factory that accepts general data symmetrizes it as (M + M^T)/2.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n);
  SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static SymmetricMatrix identity(int n);
  static SymmetricMatrix diagonal(const std::vector<double>& d);
  // (m + m^T)/2; m must be square.
  static SymmetricMatrix symmetrized(const Matrix& m);

  int dim() const { return m_.rows(); }
  double operator()(int i, int j) const { return m_(i, j); }
  void set(int i, int j, double v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }

  const Matrix& matrix() const { return m_; }

  double trace() const;

  SymmetricMatrix& operator+=(const SymmetricMatrix& rhs);
  SymmetricMatrix& operator-=(const SymmetricMatrix& rhs);
  SymmetricMatrix& operator*=(double s);
  friend SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b) { return a += b; }
  friend SymmetricMatrix operator-(SymmetricMatrix a, const SymmetricMatrix& b) { return a -= b; }
  friend SymmetricMatrix operator*(double s, SymmetricMatrix a) { return a *= s; }

 private:
  Matrix m_;
};

// Decomposition m = q^T diag(lambda) q with q orthogonal and the
// eigenvalues sorted in non-increasing order. Row i of q is the
// eigenvector of lambda[i].
struct SpectralDecomposition {
  Matrix q;
  std::vector<double> lambda;
};

/// Full eigendecomposition of a symmetric matrix (Householder
/// tridiagonalization followed by implicit-shift QL).
/// Throws ConvergenceFailure if the QL sweep does not converge.
SpectralDecomposition spectral_decompose(const SymmetricMatrix& m);

/// Lifts a scalar function through the spectrum:
/// f(m) = q^T diag(f(lambda_1), ..., f(lambda_n)) q.
/// Domain violations inside f are expected to surface as DomainError.
SymmetricMatrix apply_scalar_function(const SymmetricMatrix& m,
                                      const std::function<double(double)>& f);

/// Symmetric positive definite square root. Throws NotPositiveDefinite
/// when min eig <= pd_tolerance(m).
SymmetricMatrix sqrt_pd(const SymmetricMatrix& m);

/// Inverse of a positive definite matrix via its spectrum.
SymmetricMatrix inv_pd(const SymmetricMatrix& m);

/// Trace inner product X • Y = Tr(XY).
double inner(const SymmetricMatrix& x, const SymmetricMatrix& y);

/// Frobenius norm, sqrt(X • X).
double fro_norm(const SymmetricMatrix& x);

/// Isometric vectorization of S^n into R^{n(n+1)/2}: upper triangle read
/// row-wise with off-diagonal entries scaled by sqrt(2), so that
/// ||svec(X)||_2 = ||X||_F.
std::vector<double> svec(const SymmetricMatrix& x);

/// Inverse of svec; the dimension is recovered from the vector length.
/// Throws LengthMismatch if the length is not triangular.
SymmetricMatrix smat(const std::vector<double>& v);

/// Number of svec coordinates for dimension n.
inline int svec_size(int n) { return n * (n + 1) / 2; }

double min_eigenvalue(const SymmetricMatrix& m);

/// Scale-aware positive definiteness threshold: 1e-12 * max(1, ||m||_F).
double pd_tolerance(const SymmetricMatrix& m);

bool is_positive_definite(const SymmetricMatrix& m, double tol);
inline bool is_positive_definite(const SymmetricMatrix& m) {
  return is_positive_definite(m, pd_tolerance(m));
}

/// outer * inner * outer, re-symmetrized. This congruence shows up
/// throughout the scaling algebra (D U D, D^-1 X D^-1, ...).
SymmetricMatrix sandwich(const SymmetricMatrix& outer, const SymmetricMatrix& inner);

/// Frobenius norm of a general matrix (helper shared by the test suites).
double fro_norm(const Matrix& m);

/// Solve a dense linear system a x = b in-place by LU with partial
/// pivoting. Throws SingularSystem on a vanishing pivot.
std::vector<double> lu_solve(Matrix a, std::vector<double> b);

}  // namespace sdlcp
