#include "doctest.h"

#include "hadamard/kontsevich.hpp"

using namespace hadamard;

namespace {

Matrix<Rational> skew2(const Rational& upper) {
  Matrix<Rational> s(2, 2);
  s(0, 1) = upper;
  s(1, 0) = Rational(-upper);
  return s;
}

Matrix<Rational> cayley_of(const Matrix<Rational>& skew) {
  Matrix<Rational> eye = Matrix<Rational>::identity(skew.rows());
  return (eye - skew) * *inverse(eye + skew);
}

}  // namespace

TEST_SUITE("kontsevich") {

TEST_CASE("cayley transform of the worked 2x2 example") {
  Matrix<Rational> a = cayley_of(skew2(make_rational(1, 2)));
  CHECK(a(0, 0) == make_rational(3, 5));
  CHECK(a(0, 1) == make_rational(-4, 5));
  CHECK(a(1, 0) == make_rational(4, 5));
  CHECK(a(1, 1) == make_rational(3, 5));
  CHECK(a.transpose() * a == Matrix<Rational>::identity(2));
  CHECK(hadamard_rank(a) == 2);
}

TEST_CASE("cayley transform with zero entries would be rejected") {
  Matrix<Rational> a = cayley_of(skew2(Rational(1)));
  CHECK(a(0, 0) == Rational(0));
  CHECK(a(0, 1) == Rational(-1));
  CHECK(a(1, 0) == Rational(1));
  CHECK(a(1, 1) == Rational(0));
  CHECK_THROWS_AS(hadamard_inverse(a), ZeroEntry);
}

TEST_CASE("exact rational samples are exactly orthogonal with no zero entries") {
  for (int m = 2; m <= 5; ++m)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      OrthoSample<Rational> s = random_orthogonal<Rational>(m, 1000 * m + seed);
      CHECK(s.matrix.transpose() * s.matrix == Matrix<Rational>::identity(m));
      for (const Rational& e : s.matrix.entries()) CHECK_FALSE(is_zero(e));
    }
}

TEST_CASE("exact gaussian-rational samples satisfy the bilinear orthogonality") {
  for (int m = 2; m <= 4; ++m)
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      OrthoSample<GaussianRational> s = random_orthogonal<GaussianRational>(m, 77 * m + seed);
      CHECK(s.matrix.transpose() * s.matrix == Matrix<GaussianRational>::identity(m));
      for (const GaussianRational& e : s.matrix.entries()) CHECK_FALSE(is_zero(e));
    }
}

TEST_CASE("float samples: real and complex gram-schmidt") {
  SampleOptions real_opts;
  OrthoSample<Complex> s = random_orthogonal<Complex>(5, 42, real_opts);
  CHECK(max_abs(s.matrix.transpose() * s.matrix - Matrix<Complex>::identity(5)) <= 1e-12);
  for (const Complex& e : s.matrix.entries()) {
    CHECK(std::abs(e) > 1e-6);
    CHECK(e.imag() == 0.0);
  }

  SampleOptions complex_opts;
  complex_opts.float_real = false;
  OrthoSample<Complex> c = random_orthogonal<Complex>(4, 43, complex_opts);
  CHECK(max_abs(c.matrix.transpose() * c.matrix - Matrix<Complex>::identity(4)) <= 1e-12);
}

TEST_CASE("every exact 3x3 sample has Hadamard-inverse rank exactly two") {
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    CHECK(hadamard_rank(random_orthogonal<Rational>(3, 31337 + seed).matrix) == 2);
}

TEST_CASE("hadamard rank is transpose-invariant") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    OrthoSample<Rational> s = random_orthogonal<Rational>(4, 555 + seed);
    CHECK(hadamard_rank(s.matrix) == hadamard_rank(s.matrix.transpose()));
  }
}

TEST_CASE("verifier histograms and reproducibility") {
  VerifierReport<Rational> r = verify_conjecture<Rational>(3, 50, 7);
  CHECK(r.histogram.size() == 1);
  CHECK(r.rank_count(2) == 50);
  CHECK(r.violations.empty());

  VerifierReport<Rational> again = verify_conjecture<Rational>(3, 50, 7);
  CHECK(again.histogram == r.histogram);
  CHECK(again.total_rejections == r.total_rejections);

  VerifierReport<Rational> m5 = verify_conjecture<Rational>(5, 25, 11);
  CHECK(m5.violations.empty());
  CHECK(m5.rank_count(3) == 0);
  CHECK(m5.rank_count(1) == 0);

  CHECK_THROWS_AS(verify_conjecture<Rational>(1, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_conjecture<Rational>(3, 0, 0), std::invalid_argument);
}

TEST_CASE("float verifier flags nothing on generic samples") {
  VerifierReport<Complex> r = verify_conjecture<Complex>(4, 30, 2);
  CHECK(r.violations.empty());
  CHECK(r.suspicious.empty());
  CHECK(r.rank_count(4) == 30);
}

TEST_CASE("E_ijk hyperplanes contain the Cremona images of their three points") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    for (int n : {3, 4}) {
      OrthoSample<Rational> s = random_orthogonal<Rational>(n + 1, 900 * n + seed);
      PointConfig<Rational> cfg(matrix_columns_as_points(s.matrix));
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) {
            std::vector<Rational> h = e_hyperplane(cfg, i, j, k);
            for (int l : {i, j, k})
              CHECK(is_zero(apply_covector(h, cremona(cfg[l]))));
          }
    }
  }
}

TEST_CASE("E_012 does not annihilate q_0 for generic non-apolar points") {
  Rng rng(6060);
  int zero_hits = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<Rational> m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        do { m(i, j) = rng.rational(9, 5); } while (sgn(m(i, j)) == 0);
      }
    PointConfig<Rational> cfg(matrix_columns_as_points(m));
    std::vector<Rational> h = e_hyperplane(cfg, 0, 1, 2);
    if (is_zero(apply_covector(h, cremona(cfg[0])))) ++zero_hits;
  }
  CHECK(zero_hits == 0);

  PointConfig<Rational> cfg(matrix_columns_as_points(Matrix<Rational>::identity(3) +
                                                     Matrix<Rational>::identity(3)));
  CHECK_THROWS_AS(e_hyperplane(cfg, 0, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(e_hyperplane(cfg, 0, 1, 3), std::invalid_argument);
}

TEST_CASE("numerically rank-3 spectra get marked for exact re-checking") {
  // a synthetic spectrum: sigma_3/sigma_1 above the threshold, sigma_4 below
  Matrix<Complex> d(4, 4);
  d(0, 0) = 1.0;
  d(1, 1) = 1e-2;
  d(2, 2) = 1e-5;
  d(3, 3) = 1e-12;
  Tolerance tol;  // rel = 1e-8
  std::vector<double> sv = singular_values(d);
  CHECK(sv[2] / sv[0] > tol.rel);
  CHECK(sv[3] / sv[0] < tol.rel);
  CHECK(rank(d, tol) == 3);
  CHECK(float_rank_suspicious(rank(d, tol), 4));
  CHECK(float_rank_suspicious(1, 3));
  CHECK_FALSE(float_rank_suspicious(3, 3));  // rank 3 at m=3 cannot occur numerically anyway
  CHECK_FALSE(float_rank_suspicious(2, 4));
  CHECK_FALSE(float_rank_suspicious(4, 4));
}

TEST_CASE("naive dimension-count bound") {
  CHECK(min_rank_bound(2) == 1);
  CHECK(min_rank_bound(6) == 2);
  CHECK(min_rank_bound(10) == 3);
  CHECK_THROWS_AS(min_rank_bound(1), std::invalid_argument);

  // matches the floating-point evaluation ceil(m - sqrt(m(m+1)/2 - 1)), floored at 1
  for (long m = 2; m <= 40; ++m) {
    double exact = double(m) - std::sqrt(double(m) * double(m + 1) / 2.0 - 1.0);
    long expect = std::max(1L, static_cast<long>(std::ceil(exact - 1e-12)));
    CHECK(min_rank_bound(m) == expect);
  }
}

}  // TEST_SUITE
