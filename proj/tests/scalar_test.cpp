#include "doctest.h"

#include "hadamard/rng.hpp"
#include "hadamard/scalar.hpp"

using namespace hadamard;

TEST_SUITE("scalars") {

TEST_CASE("rational arithmetic is exact fraction arithmetic") {
  Rational a = make_rational(1, 2), b = make_rational(1, 3);
  CHECK(Rational(a + b) == make_rational(5, 6));
  CHECK(Rational(a * b) == make_rational(1, 6));
  CHECK(Rational(a - b) == make_rational(1, 6));
  CHECK(checked_div(a, b) == make_rational(3, 2));
  CHECK_THROWS_AS(checked_div(a, Rational(0)), std::domain_error);
}

TEST_CASE("gaussian rational arithmetic") {
  GaussianRational z(make_rational(2), make_rational(3));
  CHECK(conj(z) == GaussianRational(make_rational(2), make_rational(-3)));

  GaussianRational i = GaussianRational::unit_i();
  CHECK(GaussianRational(i * i) == GaussianRational(-1));

  GaussianRational w(make_rational(1, 2), make_rational(-1, 3));
  GaussianRational q = (z * w) / w;
  CHECK(q == z);
  CHECK_THROWS_AS(z / GaussianRational(0), std::domain_error);
}

TEST_CASE("is_zero per backend") {
  CHECK(is_zero(make_rational(0, 7)));
  CHECK_FALSE(is_zero(make_rational(1, 1000000000L)));
  Tolerance tol;
  CHECK(is_zero(Complex(1e-12, 0.0), tol));
  CHECK_FALSE(is_zero(Complex(1e-9, 0.0), tol));
  CHECK(is_zero(GaussianRational(0)));
  CHECK_FALSE(is_zero(GaussianRational(make_rational(0), make_rational(1, 100))));
}

TEST_CASE("square roots: exact when possible, principal branch on floats") {
  CHECK(scalar_sqrt(make_rational(9, 4)) == make_rational(3, 2));
  CHECK_THROWS_AS(scalar_sqrt(make_rational(2, 3)), NotASquare);
  CHECK_THROWS_AS(scalar_sqrt(make_rational(-4)), NotASquare);

  Complex r = scalar_sqrt(Complex(-1.0, 0.0));
  CHECK(r.real() == doctest::Approx(0.0));
  CHECK(r.imag() == doctest::Approx(1.0));

  // exact gaussian square roots
  CHECK(scalar_sqrt(GaussianRational(make_rational(-9, 4))) ==
        GaussianRational(make_rational(0), make_rational(3, 2)));
  GaussianRational z(make_rational(3, 4), make_rational(1));  // (1 + i/2)^2 / ... check squared
  GaussianRational s = scalar_sqrt(z);
  CHECK(GaussianRational(s * s) == z);
  CHECK(sgn(s.re) > 0);
  CHECK_THROWS_AS(scalar_sqrt(GaussianRational(make_rational(1), make_rational(1))), NotASquare);
}

TEST_CASE("tolerance invariants") {
  CHECK_THROWS_AS(Tolerance(1.5, 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(Tolerance(0.0, 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(Tolerance(1e-8, 0.0), std::invalid_argument);
}

TEST_CASE("field axioms hold exactly on randomized exact scalars") {
  Rng rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a = rng.rational(50, 50), b = rng.rational(50, 50), c = rng.rational(50, 50);
    CHECK(Rational((a + b) + c) == Rational(a + (b + c)));
    CHECK(Rational(a * (b + c)) == Rational(a * b + a * c));
    if (sgn(a) != 0) CHECK(Rational(checked_div(Rational(1), a) * a) == Rational(1));

    GaussianRational x = rng.gaussian_rational(20, 20), y = rng.gaussian_rational(20, 20),
                     z = rng.gaussian_rational(20, 20);
    CHECK(GaussianRational((x * y) * z) == GaussianRational(x * (y * z)));
    CHECK(GaussianRational(x * (y + z)) == GaussianRational(x * y + x * z));
    if (!is_zero(x)) CHECK(GaussianRational(x / x) == GaussianRational(1));
  }
}

TEST_CASE("float sqrt squares back within absolute tolerance") {
  Rng rng(77);
  Tolerance tol;
  for (int trial = 0; trial < 100; ++trial) {
    Complex a(rng.gaussian(), rng.gaussian());
    Complex r = scalar_sqrt(a);
    CHECK(std::abs(r * r - a) <= tol.abs * std::max(1.0, std::abs(a)));
    CHECK(r.real() >= 0.0);
  }
}

TEST_CASE("textual encodings round-trip") {
  Rational q = make_rational(-22, 8);
  CHECK(to_string(q) == "-11/4");
  CHECK(rational_from_string(to_string(q)) == q);
  CHECK(rational_from_string("3") == make_rational(3));

  GaussianRational z(make_rational(1, 2), make_rational(-3, 4));
  CHECK(to_string(z) == "1/2-3/4 i");
  CHECK(gaussian_from_string(to_string(z)) == z);
  GaussianRational w(make_rational(-5), make_rational(7, 2));
  CHECK(gaussian_from_string(to_string(w)) == w);
  CHECK(gaussian_from_string("2/1") == GaussianRational(make_rational(2)));
}

}  // TEST_SUITE
