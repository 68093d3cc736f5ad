#include "doctest.h"
#include "spinspec/exact.hpp"

#include <cmath>

using namespace spinspec;

TEST_CASE("rational arithmetic stays reduced") {
  Rational a(6, 4);
  CHECK(a.num() == 3);
  CHECK(a.den() == 2);
  CHECK(a + Rational(1, 2) == Rational(2));
  CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
  CHECK(Rational(-4, -8) == Rational(1, 2));
  CHECK(Rational(5, -10) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational(7, 3).to_string() == "7/3");
}

TEST_CASE("rational overflow is loud") {
  Rational big(std::int64_t(1) << 62);
  Rational huge = big * big;  // ~2.1e37, still in range
  CHECK(huge > big);
  CHECK_THROWS_AS(huge * Rational(16), overflow_error);
}

TEST_CASE("surd normalization extracts square factors") {
  CHECK(Surd(Rational(1), 8) == Surd(Rational(2), 2));
  CHECK(Surd(Rational(1, 2), 1).to_double() == doctest::Approx(0.5));
  CHECK(Surd(Rational(1), 6) == Surd(Rational(1), 6));
  CHECK(Surd(Rational(1), 0).is_zero());
  CHECK(Surd(Rational(3), 49) == Surd(Rational(21), 1));
}

TEST_CASE("surd products renormalize") {
  Surd half_rt3(Rational(1, 2), 3);
  CHECK(half_rt3 * half_rt3 == Surd(Rational(3, 4)));
  CHECK(Surd::sqrt_of(2) * Surd(Rational(1, 2), 2) == Surd(Rational(1)));
  // integer-factorization oracle: sqrt(6)*sqrt(10) = sqrt(4*15) = 2 sqrt(15)
  CHECK(Surd::sqrt_of(6) * Surd::sqrt_of(10) == Surd(Rational(2), 15));
}

TEST_CASE("surd addition is closed only within a radicand class") {
  CHECK(Surd::sqrt_of(2) + Surd::sqrt_of(2) == Surd(Rational(2), 2));
  CHECK((Surd::sqrt_of(3) - Surd::sqrt_of(3)).is_zero());
  CHECK_THROWS_AS(Surd::sqrt_of(2) + Surd::sqrt_of(3), std::domain_error);
  CHECK((Surd(Rational(0)) + Surd::sqrt_of(5)) == Surd::sqrt_of(5));
}

TEST_CASE("gauss surds carry the imaginary unit") {
  GaussSurd i = GaussSurd::i_times(Surd(Rational(1)));
  CHECK((i * i) == GaussSurd(Surd(Rational(-1))));
  CHECK(i.conj() == GaussSurd::i_times(Surd(Rational(-1))));
  GaussSurd z = GaussSurd::i_times(Surd(Rational(1, 2), 3));
  CHECK(z.abs_squared() == Rational(3, 4));
  CHECK_THROWS_AS(i + GaussSurd(Surd(Rational(1))), std::domain_error);
}

TEST_CASE("polynomial division and printing") {
  // 16x^4 - 40x^2 + 9
  RationalPolynomial p({Rational(9), Rational(0), Rational(-40), Rational(0), Rational(16)});
  auto [q, rem] = p.divide_linear(Rational(3, 2));
  CHECK(rem == Rational(0));
  CHECK(q.eval(Rational(-3, 2)) == Rational(0));
  CHECK(p.to_string("x") == "16*x^4 - 40*x^2 + 9");
}

TEST_CASE("half-integer grid roots of the quartic from the spin-3/2 block") {
  RationalPolynomial p({Rational(9), Rational(0), Rational(-40), Rational(0), Rational(16)});
  GridRoots r = poly_halfint_roots(p);
  REQUIRE(r.roots.size() == 4);
  CHECK(r.roots[0].first.twice == -3);
  CHECK(r.roots[1].first.twice == -1);
  CHECK(r.roots[2].first.twice == 1);
  CHECK(r.roots[3].first.twice == 3);
  for (const auto& [root, mult] : r.roots) CHECK(mult == 1);
  CHECK(r.remainder.degree() == 0);
}

TEST_CASE("grid roots of x^5 - 5x^3 + 4x") {
  RationalPolynomial p({Rational(0), Rational(4), Rational(0), Rational(-5), Rational(0), Rational(1)});
  GridRoots r = poly_halfint_roots(p);
  REQUIRE(r.roots.size() == 5);
  for (std::int64_t expect : {-4, -2, 0, 2, 4}) {
    bool found = false;
    for (const auto& [root, mult] : r.roots) found = found || (root.twice == expect && mult == 1);
    CHECK(found);
  }
}

TEST_CASE("repeated roots and remainder factor") {
  // x^2 * (x^2 + 1)
  RationalPolynomial p({Rational(0), Rational(0), Rational(1), Rational(0), Rational(1)});
  GridRoots r = poly_halfint_roots(p);
  REQUIRE(r.roots.size() == 1);
  CHECK(r.roots[0].first.twice == 0);
  CHECK(r.roots[0].second == 2);
  CHECK(r.remainder.degree() == 2);
  CHECK_THROWS_AS(poly_halfint_roots(RationalPolynomial()), std::domain_error);
}

TEST_CASE("half-integer embedding") {
  HalfInt a = HalfInt::from_twice(29);
  CHECK(a.to_rational() == Rational(29, 2));
  CHECK(!a.is_integer());
  CHECK((a + a).to_rational() == Rational(29));
  CHECK((HalfInt::from_twice(3) * HalfInt::from_twice(1)) == Rational(3, 4));
  CHECK(HalfInt::whole(15) * HalfInt::from_twice(29) == Rational(435, 2));
}
