#include "doctest.h"
#include "spinspec/spectral.hpp"

using namespace spinspec;

namespace {

RationalPolynomial poly(std::initializer_list<Rational> ascending) {
  return RationalPolynomial(std::vector<Rational>(ascending));
}

LambdaMatrix lam(std::int64_t two_l, std::int64_t two_ldot, int j,
                 const Surd& c = Surd(Rational(1))) {
  return build_lambda(RepLabel::from_twice(two_l, two_ldot), j, CoefficientSet::uniform(c));
}

}  // namespace

TEST_CASE("characteristic polynomials of the edge blocks") {
  for (int j = 1; j <= 3; ++j)
    CHECK(charpoly_exact(lam(1, 0, j)) == poly({Rational(-1, 4), Rational(0), Rational(1)}));

  // (1,0) at c = sqrt(2): x^3 - 2x for every axis, including the surd diagonal.
  for (int j = 1; j <= 3; ++j)
    CHECK(charpoly_exact(lam(2, 0, j, Surd::sqrt_of(2))) ==
          poly({Rational(0), Rational(-2), Rational(0), Rational(1)}));

  // 16x^4 - 40x^2 + 9 over 16; the factored form (x^2-9/4)(x^2-1/4).
  CHECK(charpoly_exact(lam(3, 0, 1)) ==
        poly({Rational(9, 16), Rational(0), Rational(-5, 2), Rational(0), Rational(1)}));
  CHECK(charpoly_exact(lam(4, 0, 1)) ==
        poly({Rational(0), Rational(4), Rational(0), Rational(-5), Rational(0), Rational(1)}));
  CHECK(charpoly_exact(lam(5, 0, 1)) ==
        poly({Rational(-225, 64), Rational(0), Rational(259, 16), Rational(0), Rational(-35, 4),
              Rational(0), Rational(1)}));
}

TEST_CASE("characteristic polynomial of the (1,1/2) diagonal block") {
  // (x-1/2)^2 x^2 (x+1/2)^2 = x^6 - x^4/2 + x^2/16
  CHECK(charpoly_exact(lam(2, 1, 3)) ==
        poly({Rational(0), Rational(0), Rational(1, 16), Rational(0), Rational(-1, 2), Rational(0),
              Rational(1)}));
}

TEST_CASE("unsupported shapes route to the numeric path") {
  LambdaMatrix l1 = lam(2, 1, 1);  // interior Lambda_1 is not tridiagonal
  CHECK_THROWS_AS(charpoly_exact(l1), unsupported_shape);
}

TEST_CASE("degeneracy profiles of interior chain blocks") {
  DegeneracyProfile p = profile(lam(2, 1, 3));
  CHECK(p.total() == 6);
  CHECK(p.entries.at(Rational(1, 2)) == 2);
  CHECK(p.entries.at(Rational(0)) == 2);
  CHECK(p.entries.at(Rational(-1, 2)) == 2);

  p = profile(lam(3, 2, 3));
  CHECK(p.total() == 12);
  CHECK(p.entries.at(Rational(3, 2)) == 2);
  CHECK(p.entries.at(Rational(1, 2)) == 2);
  CHECK(p.entries.at(Rational(0)) == 4);

  p = profile(lam(4, 3, 3));
  CHECK(p.total() == 20);
  CHECK(p.entries.at(Rational(0)) == 4);
  CHECK(p.entries.at(Rational(3)) == 2);
  CHECK(p.entries.at(Rational(3, 2)) == 2);
  CHECK(p.entries.at(Rational(1)) == 2);
  CHECK(p.entries.at(Rational(1, 2)) == 2);

  p = profile(lam(7, 6, 3));
  CHECK(p.total() == 56);
  CHECK(p.entries.at(Rational(0)) == 8);
  CHECK(p.entries.at(Rational(3, 2)) == 4);
  CHECK(p.entries.at(Rational(-3, 2)) == 4);
  for (const auto& [eig, mult] : p.entries)
    if (!eig.is_zero() && eig.abs() != Rational(3, 2)) CHECK(mult == 2);
}

TEST_CASE("quarter-grid eigenvalues of (1/2,1/2)") {
  DegeneracyProfile p = profile(lam(1, 1, 3));
  CHECK(p.total() == 4);
  CHECK(p.entries.at(Rational(1, 4)) == 2);
  CHECK(p.entries.at(Rational(-1, 4)) == 2);
  CHECK(p.negation_symmetric());
}

TEST_CASE("profile from tridiagonal charpoly") {
  DegeneracyProfile p = profile(lam(4, 0, 1));
  CHECK(p.distinct() == 5);
  for (std::int64_t k = -2; k <= 2; ++k) CHECK(p.entries.at(Rational(k)) == 1);
}

TEST_CASE("numeric spectrum of the zero matrix") {
  OperatorMatrix z(5);
  DegeneracyProfile p = spectrum_numeric(z, 1e-7);
  CHECK(p.distinct() == 1);
  CHECK(p.entries.at(Rational(0)) == 5);
}

TEST_CASE("edge blocks classify simple up to l = 6") {
  for (std::int64_t two_l = 1; two_l <= 12; ++two_l) {
    SpectrumReport r = classify(lam(two_l, 0, 3));
    CHECK(r.classification == SpectrumClass::simple);
    CHECK(r.distinct_count == static_cast<int>(two_l) + 1);
  }
}

TEST_CASE("numeric spectrum snaps to the grid") {
  DegeneracyProfile p = spectrum_numeric(lam(3, 0, 2).entries, 1e-7);
  CHECK(p.distinct() == 4);
  CHECK(p.entries.at(Rational(3, 2)) == 1);
  CHECK(p.entries.at(Rational(-3, 2)) == 1);

  // Interior Lambda_1 eigenvalues are irrational: the snap must refuse.
  CHECK_THROWS_AS(spectrum_numeric(lam(2, 1, 1).entries, 1e-7), snap_failure);
  CHECK_THROWS_AS(spectrum_numeric(lam(1, 0, 3).entries, 0.3), std::domain_error);
}

TEST_CASE("interior Lambda_1 multiplicity histogram matches Lambda_3's") {
  // Frozen from the numeric oracle: eigenvalues +-1/sqrt(2) twice, 0 twice --
  // same 2,2,2 histogram as Lambda_3, different eigenvalue values.
  auto mults = numeric_multiplicities(lam(2, 1, 1).entries, 1e-9);
  REQUIRE(mults.size() == 3);
  CHECK(mults[0] == 2);
  CHECK(mults[1] == 2);
  CHECK(mults[2] == 2);
}

TEST_CASE("divisor rendering") {
  CHECK(divisor_string(classify(lam(2, 1, 3))) == "(x-1/2)^2 x^2 (x+1/2)^2");
  CHECK(divisor_string(classify(lam(2, 0, 3))) == "(x-1) x (x+1)");
  CHECK(divisor_string(classify(lam(3, 2, 3))) ==
        "(x-3/2)^2 (x-1/2)^2 x^4 (x+1/2)^2 (x+3/2)^2");
}

TEST_CASE("classification of the proton-level block drops the overflowing charpoly") {
  SpectrumReport r = classify(lam(30, 29, 3));
  CHECK(r.charpoly.is_zero());  // degree-930 expansion exceeds 128-bit coefficients
  CHECK(r.distinct_count == 329);
  CHECK(r.classification == SpectrumClass::degenerate);
  std::int64_t total = 0;
  for (const auto& ec : r.profile) {
    total += ec.alg;
    CHECK(ec.geom == ec.alg);
  }
  CHECK(total == 930);
}

TEST_CASE("classification reports") {
  SpectrumReport r = classify(lam(6, 0, 3));
  CHECK(r.classification == SpectrumClass::simple);
  CHECK(r.distinct_count == 7);
  for (const auto& ec : r.profile) {
    CHECK(ec.alg == 1);
    CHECK(ec.geom == 1);
  }

  r = classify(lam(2, 1, 3));
  CHECK(r.classification == SpectrumClass::degenerate);
  CHECK(r.distinct_count == 3);
  for (const auto& ec : r.profile) {
    CHECK(ec.alg == 2);
    CHECK(ec.geom == 2);  // Hermitian diagonal block: geometric = algebraic
  }

  // Tridiagonal route: unreduced, so geometric multiplicity is 1 throughout.
  r = classify(lam(5, 0, 1));
  CHECK(r.classification == SpectrumClass::simple);
  for (const auto& ec : r.profile) CHECK(ec.geom == 1);
}
