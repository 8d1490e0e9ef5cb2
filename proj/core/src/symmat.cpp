#include "sdlcp/symmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sdlcp {

namespace {

void check_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix shapes differ: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

double hypot2(double a, double b) { return std::hypot(a, b); }

// Householder reduction of z (symmetric, overwritten) to tridiagonal form.
// On exit d holds the diagonal, e the subdiagonal (e[0] unused), and z the
// accumulated orthogonal transformation. Classic EISPACK tred2.
void tred2(std::vector<std::vector<double>>& z, std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  for (int j = 0; j < n; j++) d[j] = z[n - 1][j];

  for (int i = n - 1; i > 0; i--) {
    double scale = 0.0;
    double h = 0.0;
    for (int k = 0; k < i; k++) scale += std::fabs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (int j = 0; j < i; j++) {
        d[j] = z[i - 1][j];
        z[i][j] = 0.0;
        z[j][i] = 0.0;
      }
    } else {
      for (int k = 0; k < i; k++) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (int j = 0; j < i; j++) e[j] = 0.0;

      for (int j = 0; j < i; j++) {
        f = d[j];
        z[j][i] = f;
        g = e[j] + z[j][j] * f;
        for (int k = j + 1; k <= i - 1; k++) {
          g += z[k][j] * d[k];
          e[k] += z[k][j] * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (int j = 0; j < i; j++) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      double hh = f / (h + h);
      for (int j = 0; j < i; j++) e[j] -= hh * d[j];
      for (int j = 0; j < i; j++) {
        f = d[j];
        g = e[j];
        for (int k = j; k <= i - 1; k++) z[k][j] -= (f * e[k] + g * d[k]);
        d[j] = z[i - 1][j];
        z[i][j] = 0.0;
      }
    }
    d[i] = h;
  }

  // accumulate transformations
  for (int i = 0; i < n - 1; i++) {
    z[n - 1][i] = z[i][i];
    z[i][i] = 1.0;
    double h = d[i + 1];
    if (h != 0.0) {
      for (int k = 0; k <= i; k++) d[k] = z[k][i + 1] / h;
      for (int j = 0; j <= i; j++) {
        double g = 0.0;
        for (int k = 0; k <= i; k++) g += z[k][i + 1] * z[k][j];
        for (int k = 0; k <= i; k++) z[k][j] -= g * d[k];
      }
    }
    for (int k = 0; k <= i; k++) z[k][i + 1] = 0.0;
  }
  for (int j = 0; j < n; j++) {
    d[j] = z[n - 1][j];
    z[n - 1][j] = 0.0;
  }
  z[n - 1][n - 1] = 1.0;
  e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e); z accumulates eigenvectors
// by columns. Classic EISPACK tql2.
void tql2(std::vector<std::vector<double>>& z, std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  for (int i = 1; i < n; i++) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; l++) {
    tst1 = std::max(tst1, std::fabs(d[l]) + std::fabs(e[l]));
    int m = l;
    while (m < n) {
      if (std::fabs(e[m]) <= eps * tst1) break;
      m++;
    }

    if (m > l) {
      int iter = 0;
      do {
        if (++iter > 50) {
          throw ConvergenceFailure("symmetric QL did not converge after 50 sweeps");
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = hypot2(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; i++) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0;
        double c2 = c;
        double c3 = c;
        double el1 = e[l + 1];
        double s = 0.0;
        double s2 = 0.0;
        for (int i = m - 1; i >= l; i--) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = hypot2(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          for (int k = 0; k < n; k++) {
            h = z[k][i + 1];
            z[k][i + 1] = s * z[k][i] + c * h;
            z[k][i] = c * z[k][i] - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::fabs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

}  // namespace

Matrix::Matrix(int rows, int cols, std::vector<double> data) : rows_(rows), cols_(cols), a_(std::move(data)) {
  if (a_.size() != static_cast<size_t>(rows) * cols) {
    throw DimensionMismatch("matrix data length does not match shape");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  a_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("ragged initializer rows");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; i++) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) t(j, i) = (*this)(i, j);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  check_same_shape(*this, rhs);
  for (size_t k = 0; k < a_.size(); k++) a_[k] += rhs.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  check_same_shape(*this, rhs);
  for (size_t k = 0; k < a_.size(); k++) a_[k] -= rhs.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("inner dimensions differ in matrix product");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); i++) {
    for (int k = 0; k < a.cols(); k++) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); j++) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

SymmetricMatrix::SymmetricMatrix(int n) : m_(n, n) {
  if (n < 1) throw DimensionMismatch("symmetric matrix dimension must be >= 1");
}

SymmetricMatrix::SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : SymmetricMatrix(symmetrized(Matrix(rows))) {}

SymmetricMatrix SymmetricMatrix::identity(int n) {
  SymmetricMatrix s(n);
  for (int i = 0; i < n; i++) s.set(i, i, 1.0);
  return s;
}

SymmetricMatrix SymmetricMatrix::diagonal(const std::vector<double>& d) {
  SymmetricMatrix s(static_cast<int>(d.size()));
  for (int i = 0; i < s.dim(); i++) s.set(i, i, d[i]);
  return s;
}

SymmetricMatrix SymmetricMatrix::symmetrized(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("cannot symmetrize a non-square matrix");
  SymmetricMatrix s(m.rows());
  for (int i = 0; i < m.rows(); i++)
    for (int j = i; j < m.cols(); j++) s.set(i, j, 0.5 * (m(i, j) + m(j, i)));
  return s;
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim(); i++) t += m_(i, i);
  return t;
}

SymmetricMatrix& SymmetricMatrix::operator+=(const SymmetricMatrix& rhs) {
  m_ += rhs.m_;
  return *this;
}

SymmetricMatrix& SymmetricMatrix::operator-=(const SymmetricMatrix& rhs) {
  m_ -= rhs.m_;
  return *this;
}

SymmetricMatrix& SymmetricMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

SpectralDecomposition spectral_decompose(const SymmetricMatrix& m) {
  const int n = m.dim();
  std::vector<std::vector<double>> z(n, std::vector<double>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) z[i][j] = m(i, j);
  std::vector<double> d(n), e(n);

  if (n == 1) {
    d[0] = z[0][0];
    z[0][0] = 1.0;
  } else {
    tred2(z, d, e);
    tql2(z, d, e);
  }

  // sort non-increasing; z columns are the eigenvectors
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] > d[b]; });

  SpectralDecomposition out;
  out.lambda.resize(n);
  out.q = Matrix(n, n);
  for (int i = 0; i < n; i++) {
    out.lambda[i] = d[idx[i]];
    for (int k = 0; k < n; k++) out.q(i, k) = z[k][idx[i]];  // row i = eigenvector
  }
  return out;
}

SymmetricMatrix apply_scalar_function(const SymmetricMatrix& m,
                                      const std::function<double(double)>& f) {
  const SpectralDecomposition s = spectral_decompose(m);
  const int n = m.dim();
  Matrix r(n, n);
  for (int t = 0; t < n; t++) {
    const double ft = f(s.lambda[t]);
    if (ft == 0.0) continue;
    for (int i = 0; i < n; i++) {
      const double w = ft * s.q(t, i);
      for (int j = 0; j < n; j++) r(i, j) += w * s.q(t, j);
    }
  }
  return SymmetricMatrix::symmetrized(r);
}

namespace {

SymmetricMatrix spectral_map_pd(const SymmetricMatrix& m, const char* op,
                                const std::function<double(double)>& f) {
  const SpectralDecomposition s = spectral_decompose(m);
  const double tol = pd_tolerance(m);
  if (s.lambda.back() <= tol) {
    throw NotPositiveDefinite(std::string(op) + ": min eigenvalue " +
                              std::to_string(s.lambda.back()) + " <= tolerance " +
                              std::to_string(tol));
  }
  const int n = m.dim();
  Matrix r(n, n);
  for (int t = 0; t < n; t++) {
    const double ft = f(s.lambda[t]);
    for (int i = 0; i < n; i++) {
      const double w = ft * s.q(t, i);
      for (int j = 0; j < n; j++) r(i, j) += w * s.q(t, j);
    }
  }
  return SymmetricMatrix::symmetrized(r);
}

}  // namespace

SymmetricMatrix sqrt_pd(const SymmetricMatrix& m) {
  return spectral_map_pd(m, "sqrt_pd", [](double t) { return std::sqrt(t); });
}

SymmetricMatrix inv_pd(const SymmetricMatrix& m) {
  return spectral_map_pd(m, "inv_pd", [](double t) { return 1.0 / t; });
}

double inner(const SymmetricMatrix& x, const SymmetricMatrix& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("inner: dimensions differ");
  // Tr(XY) = sum_ij X_ij Y_ij for symmetric arguments
  double t = 0.0;
  const auto& a = x.matrix().data();
  const auto& b = y.matrix().data();
  for (size_t k = 0; k < a.size(); k++) t += a[k] * b[k];
  return t;
}

double fro_norm(const SymmetricMatrix& x) { return std::sqrt(std::max(0.0, inner(x, x))); }

double fro_norm(const Matrix& m) {
  double t = 0.0;
  for (double v : m.data()) t += v * v;
  return std::sqrt(t);
}

std::vector<double> svec(const SymmetricMatrix& x) {
  const int n = x.dim();
  std::vector<double> v;
  v.reserve(svec_size(n));
  const double r2 = std::sqrt(2.0);
  for (int i = 0; i < n; i++) {
    v.push_back(x(i, i));
    for (int j = i + 1; j < n; j++) v.push_back(r2 * x(i, j));
  }
  return v;
}

SymmetricMatrix smat(const std::vector<double>& v) {
  // invert m = n(n+1)/2
  const auto m = v.size();
  const int n = static_cast<int>((std::sqrt(8.0 * static_cast<double>(m) + 1.0) - 1.0) / 2.0 + 0.5);
  if (n < 1 || static_cast<size_t>(svec_size(n)) != m) {
    throw LengthMismatch("smat: vector length " + std::to_string(m) + " is not triangular");
  }
  SymmetricMatrix x(n);
  const double inv_r2 = 1.0 / std::sqrt(2.0);
  size_t k = 0;
  for (int i = 0; i < n; i++) {
    x.set(i, i, v[k++]);
    for (int j = i + 1; j < n; j++) x.set(i, j, inv_r2 * v[k++]);
  }
  return x;
}

double min_eigenvalue(const SymmetricMatrix& m) { return spectral_decompose(m).lambda.back(); }

double pd_tolerance(const SymmetricMatrix& m) { return 1e-12 * std::max(1.0, fro_norm(m)); }

bool is_positive_definite(const SymmetricMatrix& m, double tol) {
  return min_eigenvalue(m) > tol;
}

SymmetricMatrix sandwich(const SymmetricMatrix& outer, const SymmetricMatrix& inner) {
  return SymmetricMatrix::symmetrized(outer.matrix() * inner.matrix() * outer.matrix());
}

std::vector<double> lu_solve(Matrix a, std::vector<double> b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n) {
    throw DimensionMismatch("lu_solve: shapes do not match");
  }
  std::vector<int> piv(n);
  std::iota(piv.begin(), piv.end(), 0);

  double scale = 0.0;
  for (double v : a.data()) scale = std::max(scale, std::fabs(v));
  const double tiny = 1e-14 * std::max(1.0, scale);

  for (int k = 0; k < n; k++) {
    int p = k;
    for (int i = k + 1; i < n; i++)
      if (std::fabs(a(i, k)) > std::fabs(a(p, k))) p = i;
    if (std::fabs(a(p, k)) <= tiny) {
      throw SingularSystem("lu_solve: pivot " + std::to_string(k) + " below threshold");
    }
    if (p != k) {
      for (int j = 0; j < n; j++) std::swap(a(k, j), a(p, j));
      std::swap(b[k], b[p]);
    }
    for (int i = k + 1; i < n; i++) {
      const double f = a(i, k) / a(k, k);
      a(i, k) = f;
      for (int j = k + 1; j < n; j++) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  for (int i = n - 1; i >= 0; i--) {
    double s = b[i];
    for (int j = i + 1; j < n; j++) s -= a(i, j) * b[j];
    b[i] = s / a(i, i);
  }
  return b;
}

}  // namespace sdlcp
