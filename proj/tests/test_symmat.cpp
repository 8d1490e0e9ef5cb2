#include <doctest.h>

#include <cmath>

#include "sdlcp/detail/rng.hpp"
#include "sdlcp/symmat.hpp"

using namespace sdlcp;

namespace {

SymmetricMatrix random_symmetric(int n, detail::Rng& rng, double scale = 1.0) {
  SymmetricMatrix s(n);
  for (int i = 0; i < n; i++)
    for (int j = i; j < n; j++) s.set(i, j, scale * rng.uniform_sym());
  return s;
}

SymmetricMatrix random_pd(int n, detail::Rng& rng) {
  Matrix c(n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) c(i, j) = rng.uniform_sym();
  return SymmetricMatrix::symmetrized(c * c.transposed()) + 0.3 * SymmetricMatrix::identity(n);
}

double reconstruction_residual(const SymmetricMatrix& m) {
  const auto s = spectral_decompose(m);
  const int n = m.dim();
  Matrix rec(n, n);
  for (int t = 0; t < n; t++)
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) rec(i, j) += s.lambda[t] * s.q(t, i) * s.q(t, j);
  return fro_norm(rec - m.matrix());
}

}  // namespace

TEST_CASE("spectral_decompose on diagonal and identity input") {
  const auto s = spectral_decompose(SymmetricMatrix::diagonal({3.0, 1.0, 2.0}));
  CHECK(s.lambda[0] == doctest::Approx(3.0));
  CHECK(s.lambda[1] == doctest::Approx(2.0));
  CHECK(s.lambda[2] == doctest::Approx(1.0));

  const auto id = spectral_decompose(SymmetricMatrix::identity(4));
  for (double l : id.lambda) CHECK(l == doctest::Approx(1.0));
}

TEST_CASE("spectral_decompose of [[2,1],[1,2]] gives eigenvalues 3, 1") {
  const SymmetricMatrix m = {{2.0, 1.0}, {1.0, 2.0}};
  const auto s = spectral_decompose(m);
  CHECK(s.lambda[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(s.lambda[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spectral invariants on random symmetric matrices") {
  detail::Rng rng(42);
  for (int n = 1; n <= 8; n++) {
    for (int rep = 0; rep < 20; rep++) {
      const auto m = random_symmetric(n, rng, 3.0);
      const auto s = spectral_decompose(m);
      // sorted non-increasing
      for (int i = 0; i + 1 < n; i++) CHECK(s.lambda[i] >= s.lambda[i + 1]);
      // orthogonality
      CHECK(fro_norm(s.q.transposed() * s.q - Matrix::identity(n)) <= 1e-10 * n);
      // reconstruction
      CHECK(reconstruction_residual(m) <= 1e-9 * (1.0 + fro_norm(m)));
    }
  }
}

TEST_CASE("apply_scalar_function basics") {
  const auto sq = apply_scalar_function(SymmetricMatrix::diagonal({2.0, 3.0}),
                                        [](double t) { return t * t; });
  CHECK(sq(0, 0) == doctest::Approx(4.0));
  CHECK(sq(1, 1) == doctest::Approx(9.0));
  CHECK(sq(0, 1) == doctest::Approx(0.0));

  detail::Rng rng(7);
  const auto m = random_symmetric(5, rng);
  const auto same = apply_scalar_function(m, [](double t) { return t; });
  CHECK(fro_norm(same - m) <= 1e-12);
}

TEST_CASE("functions of the same matrix commute") {
  detail::Rng rng(11);
  for (int rep = 0; rep < 10; rep++) {
    const auto m = random_symmetric(6, rng, 2.0);
    const auto f = apply_scalar_function(m, [](double t) { return std::exp(0.3 * t); });
    const auto g = apply_scalar_function(m, [](double t) { return t * t * t; });
    CHECK(fro_norm(f.matrix() * g.matrix() - g.matrix() * f.matrix()) <= 1e-9);
  }
}

TEST_CASE("sqrt_pd examples and properties") {
  const auto r = sqrt_pd(SymmetricMatrix::diagonal({4.0, 9.0}));
  CHECK(r(0, 0) == doctest::Approx(2.0));
  CHECK(r(1, 1) == doctest::Approx(3.0));
  CHECK(fro_norm(sqrt_pd(SymmetricMatrix::identity(3)) - SymmetricMatrix::identity(3)) <= 1e-12);

  const SymmetricMatrix m = {{2.0, 1.0}, {1.0, 2.0}};
  const auto s = sqrt_pd(m);
  const auto eig = spectral_decompose(s).lambda;
  CHECK(eig[0] == doctest::Approx(std::sqrt(3.0)));
  CHECK(eig[1] == doctest::Approx(1.0));

  detail::Rng rng(13);
  for (int rep = 0; rep < 10; rep++) {
    const auto p = random_pd(5, rng);
    const auto root = sqrt_pd(p);
    CHECK(fro_norm(SymmetricMatrix::symmetrized(root.matrix() * root.matrix()) - p) <=
          1e-9 * (1.0 + fro_norm(p)));
    CHECK(fro_norm(inv_pd(sqrt_pd(p)) - sqrt_pd(inv_pd(p))) <= 1e-8);
  }

  CHECK_THROWS_AS(sqrt_pd(SymmetricMatrix::diagonal({1.0, -0.5})), NotPositiveDefinite);
  CHECK_THROWS_AS(sqrt_pd(SymmetricMatrix::diagonal({1.0, 0.0})), NotPositiveDefinite);
}

TEST_CASE("inv_pd examples") {
  const auto inv = inv_pd(SymmetricMatrix::diagonal({2.0, 4.0}));
  CHECK(inv(0, 0) == doctest::Approx(0.5));
  CHECK(inv(1, 1) == doctest::Approx(0.25));

  const SymmetricMatrix m = {{2.0, 1.0}, {1.0, 2.0}};
  const auto i2 = inv_pd(m);
  CHECK(i2(0, 0) == doctest::Approx(2.0 / 3.0));
  CHECK(i2(0, 1) == doctest::Approx(-1.0 / 3.0));
  CHECK(fro_norm(SymmetricMatrix::symmetrized(i2.matrix() * m.matrix()) -
                 SymmetricMatrix::identity(2)) <= 1e-9 * 2);

  CHECK_THROWS_AS(inv_pd(SymmetricMatrix::diagonal({-1.0, 2.0})), NotPositiveDefinite);
}

TEST_CASE("inner product and Frobenius norm") {
  CHECK(inner(SymmetricMatrix::identity(5), SymmetricMatrix::identity(5)) == doctest::Approx(5.0));
  CHECK(inner(SymmetricMatrix::diagonal({1.0, 2.0}), SymmetricMatrix::diagonal({3.0, 4.0})) ==
        doctest::Approx(11.0));
  CHECK(inner(SymmetricMatrix::diagonal({1.0, 2.0}), SymmetricMatrix(2)) == doctest::Approx(0.0));

  detail::Rng rng(3);
  const auto x = random_symmetric(4, rng);
  const auto y = random_symmetric(4, rng);
  CHECK(inner(x, y) == doctest::Approx(inner(y, x)));

  CHECK(fro_norm(SymmetricMatrix(3)) == doctest::Approx(0.0));
  CHECK(fro_norm(SymmetricMatrix::identity(4)) == doctest::Approx(2.0));
  CHECK(fro_norm(SymmetricMatrix::diagonal({3.0, 4.0})) == doctest::Approx(5.0));

  CHECK_THROWS_AS(inner(SymmetricMatrix::identity(2), SymmetricMatrix::identity(3)),
                  DimensionMismatch);
}

TEST_CASE("svec is an isometry inverted by smat") {
  CHECK(fro_norm(smat(svec(SymmetricMatrix(3)))) == doctest::Approx(0.0));

  const SymmetricMatrix ones = {{1.0, 1.0}, {1.0, 1.0}};
  double norm2 = 0.0;
  for (double v : svec(ones)) norm2 += v * v;
  CHECK(std::sqrt(norm2) == doctest::Approx(2.0));

  detail::Rng rng(5);
  for (int rep = 0; rep < 20; rep++) {
    const auto m = random_symmetric(3 + rep % 5, rng, 2.0);
    const auto v = svec(m);
    double vnorm2 = 0.0;
    for (double t : v) vnorm2 += t * t;
    CHECK(std::sqrt(vnorm2) == doctest::Approx(fro_norm(m)).epsilon(1e-12));
    CHECK(fro_norm(smat(v) - m) <= 1e-14);
    // linearity
    const auto m2 = random_symmetric(m.dim(), rng, 2.0);
    const auto vsum = svec(m + m2);
    const auto v2 = svec(m2);
    for (std::size_t i = 0; i < vsum.size(); i++) {
      CHECK(vsum[i] == doctest::Approx(v[i] + v2[i]).epsilon(1e-12));
    }
  }

  CHECK_THROWS_AS(smat(std::vector<double>{1.0, 2.0}), LengthMismatch);
}

TEST_CASE("min_eigenvalue and positive definiteness") {
  CHECK(min_eigenvalue(SymmetricMatrix::identity(3)) == doctest::Approx(1.0));
  CHECK(min_eigenvalue(SymmetricMatrix::diagonal({-1.0, 2.0})) == doctest::Approx(-1.0));
  const SymmetricMatrix m = {{2.0, 1.0}, {1.0, 2.0}};
  CHECK(min_eigenvalue(m) == doctest::Approx(1.0));

  CHECK(is_positive_definite(SymmetricMatrix::identity(2)));
  CHECK_FALSE(is_positive_definite(SymmetricMatrix::diagonal({1.0, -1e-6})));
  CHECK_FALSE(is_positive_definite(SymmetricMatrix::diagonal({1.0, 0.0})));
  // scale-aware tolerance: a tiny eigenvalue counts as zero next to a huge one
  CHECK_FALSE(is_positive_definite(SymmetricMatrix::diagonal({1e14, 1e-4}),
                                   pd_tolerance(SymmetricMatrix::diagonal({1e14, 1e-4}))));
}

TEST_CASE("lu_solve recovers known solutions and flags singularity") {
  const Matrix a = {{2.0, 1.0}, {1.0, 3.0}};
  const auto x = lu_solve(a, {5.0, 10.0});
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(3.0));

  const Matrix sing = {{1.0, 2.0}, {2.0, 4.0}};
  CHECK_THROWS_AS(lu_solve(sing, {1.0, 1.0}), SingularSystem);
}

TEST_CASE("constructors reject bad shapes") {
  CHECK_THROWS_AS(SymmetricMatrix(0), DimensionMismatch);
  CHECK_THROWS_AS(SymmetricMatrix::symmetrized(Matrix(2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(Matrix(2, 2, {1.0, 2.0, 3.0}), DimensionMismatch);
}
