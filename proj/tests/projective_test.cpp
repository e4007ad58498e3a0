#include "doctest.h"

#include "hadamard/projective.hpp"
#include "hadamard/rng.hpp"

using namespace hadamard;

namespace {

Point<Rational> rat_point(std::initializer_list<long> coords) {
  std::vector<Rational> c;
  for (long v : coords) c.emplace_back(v);
  return Point<Rational>(std::move(c));
}

Point<Rational> random_nonzero_point(Rng& rng, int dim) {
  std::vector<Rational> c(dim + 1);
  for (Rational& x : c) {
    do { x = rng.rational(9, 5); } while (sgn(x) == 0);
  }
  return Point<Rational>(std::move(c));
}

}  // namespace

TEST_SUITE("projective") {

TEST_CASE("normalize") {
  CHECK(normalize(rat_point({2, 4, 6})).coords ==
        std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
  CHECK(normalize(rat_point({0, 5})).coords == std::vector<Rational>{Rational(0), Rational(1)});

  Point<Complex> f(std::vector<Complex>{Complex(0.3, 0), Complex(-0.6, 0)});
  Point<Complex> nf = normalize(f);
  CHECK(nf.coords[0].real() == doctest::Approx(-0.5));
  CHECK(nf.coords[1].real() == doctest::Approx(1.0));

  CHECK_THROWS_AS(normalize(rat_point({0, 0})), std::domain_error);
}

TEST_CASE("normalize is idempotent") {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    Point<Rational> p = random_nonzero_point(rng, 3);
    Point<Rational> n = normalize(p);
    CHECK(normalize(n).coords == n.coords);
  }
}

TEST_CASE("projective equality by minors") {
  CHECK(proj_equal(rat_point({1, 2, 3}), rat_point({2, 4, 6})));
  CHECK_FALSE(proj_equal(rat_point({1, 2, 3}), rat_point({1, 2, 4})));
  CHECK(proj_equal(rat_point({0, 1}), rat_point({0, -7})));
}

TEST_CASE("span dimension") {
  std::vector<Point<Rational>> simplex = simplex_points<Rational>(2);
  CHECK(span_dim(std::span<const Point<Rational>>(simplex)) == 2);

  // coincident points on a raw list (a PointConfig would reject them)
  std::vector<Point<Rational>> same{rat_point({1, 1}), rat_point({2, 2})};
  CHECK(span_dim(std::span<const Point<Rational>>(same)) == 0);
  CHECK_THROWS_AS((PointConfig<Rational>(same)), std::invalid_argument);

  for (int n = 2; n <= 4; ++n) {
    std::vector<Point<Rational>> pts = simplex_points<Rational>(n);
    pts.push_back(Point<Rational>(std::vector<Rational>(n + 1, Rational(1))));
    CHECK(span_dim(std::span<const Point<Rational>>(pts)) == n);
  }

  CHECK(span_dim(std::span<const Point<Rational>>()) == -1);
}

TEST_CASE("collinear means the span is exactly a line") {
  PointConfig<Rational> two({rat_point({1, 0, 0}), rat_point({0, 1, 0})});
  CHECK(collinear(two));
  PointConfig<Rational> three(simplex_points<Rational>(2));
  CHECK_FALSE(collinear(three));
}

TEST_CASE("cremona transform") {
  CHECK(proj_equal(cremona(rat_point({1, 2, 4})), rat_point({4, 2, 1})));
  Point<Rational> ones = rat_point({1, 1, 1, 1});
  CHECK(proj_equal(cremona(ones), ones));
  Point<Rational> p = rat_point({3, 5, 7});
  CHECK(proj_equal(cremona(cremona(p)), p));

  CHECK_THROWS_AS(cremona(rat_point({1, 0, 2})), BlownDownHyperplane);
  try {
    cremona(rat_point({1, 0, 2}));
  } catch (const BlownDownHyperplane& e) {
    CHECK(e.index == 1);
  }
}

TEST_CASE("cremona is an involution on randomized no-zero points") {
  Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    Point<Rational> p = random_nonzero_point(rng, static_cast<int>(rng.uniform_long(1, 5)));
    CHECK(proj_equal(cremona(cremona(p)), p));
  }
}

TEST_CASE("hadamard inverse") {
  Matrix<Rational> m(2, 2);
  m(0, 0) = Rational(1);
  m(0, 1) = Rational(2);
  m(1, 0) = Rational(3);
  m(1, 1) = Rational(4);
  Matrix<Rational> b = hadamard_inverse(m);
  CHECK(b(0, 0) == Rational(1));
  CHECK(b(0, 1) == make_rational(1, 2));
  CHECK(b(1, 0) == make_rational(1, 3));
  CHECK(b(1, 1) == make_rational(1, 4));
  CHECK(hadamard_inverse(b) == m);

  Matrix<Rational> cayley(2, 2);
  cayley(0, 0) = make_rational(3, 5);
  cayley(0, 1) = make_rational(-4, 5);
  cayley(1, 0) = make_rational(4, 5);
  cayley(1, 1) = make_rational(3, 5);
  Matrix<Rational> inv = hadamard_inverse(cayley);
  CHECK(inv(0, 0) == make_rational(5, 3));
  CHECK(inv(0, 1) == make_rational(-5, 4));
  CHECK(inv(1, 0) == make_rational(5, 4));
  CHECK(inv(1, 1) == make_rational(5, 3));

  m(1, 0) = Rational(0);
  try {
    hadamard_inverse(m);
    FAIL("expected ZeroEntry");
  } catch (const ZeroEntry& e) {
    CHECK(e.row == 1);
    CHECK(e.col == 0);
  }
}

TEST_CASE("span of cremona images matches Hadamard-inverse rank") {
  // the rank of the entry-wise reciprocal equals the projective span of the
  // reciprocal columns plus one, for any no-zero-entry matrix
  Rng rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = static_cast<int>(rng.uniform_long(2, 5));
    int cols = static_cast<int>(rng.uniform_long(2, 5));
    Matrix<Rational> m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        do { m(i, j) = rng.rational(9, 5); } while (sgn(m(i, j)) == 0);
      }
    std::vector<Point<Rational>> images;
    for (const Point<Rational>& col : matrix_columns_as_points(m)) images.push_back(cremona(col));
    CHECK(span_dim(std::span<const Point<Rational>>(images)) + 1 == rank(hadamard_inverse(m)));
  }
}

TEST_CASE("point configurations validate their invariants") {
  CHECK_THROWS_AS(PointConfig<Rational>({rat_point({1, 2}), rat_point({1, 2, 3})}),
                  std::invalid_argument);
  PointConfig<Rational> ok({rat_point({1, 2}), rat_point({1, 3})});
  CHECK(ok.ambient_dim() == 1);
  CHECK(ok.size() == 2);
}

}  // TEST_SUITE
