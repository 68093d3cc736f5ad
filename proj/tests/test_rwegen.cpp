#include "doctest.h"
#include "spinspec/rwegen.hpp"

using namespace spinspec;

namespace {

GaussSurd rat(std::int64_t n, std::int64_t d = 1) { return GaussSurd(Surd(Rational(n, d))); }
GaussSurd img(std::int64_t n, std::int64_t d = 1) {
  return GaussSurd::i_times(Surd(Rational(n, d)));
}

}  // namespace

TEST_CASE("helicity basis order") {
  HelicityBasis b = basis(RepLabel::from_twice(2, 1));
  REQUIRE(b.order.size() == 6);
  // (1,1/2),(0,1/2),(-1,1/2),(1,-1/2),(0,-1/2),(-1,-1/2)
  CHECK(b.order[0] == std::make_pair(HalfInt::whole(1), HalfInt::from_twice(1)));
  CHECK(b.order[1] == std::make_pair(HalfInt::whole(0), HalfInt::from_twice(1)));
  CHECK(b.order[2] == std::make_pair(HalfInt::whole(-1), HalfInt::from_twice(1)));
  CHECK(b.order[3] == std::make_pair(HalfInt::whole(1), HalfInt::from_twice(-1)));
  CHECK(b.order[5] == std::make_pair(HalfInt::whole(-1), HalfInt::from_twice(-1)));

  b = basis(RepLabel::from_twice(1, 0));
  REQUIRE(b.order.size() == 2);
  CHECK(b.order[0].first.twice == 1);

  b = basis(RepLabel::from_twice(30, 29));
  REQUIRE(b.order.size() == 930);
  CHECK(b.order[0] == std::make_pair(HalfInt::whole(15), HalfInt::from_twice(29)));
  CHECK(basis_index(RepLabel::from_twice(30, 29), HalfInt::whole(15), HalfInt::from_twice(29)) == 0);
}

TEST_CASE("coefficient defaults and off-diagonal rejection") {
  CoefficientSet c;
  RepLabel rep = RepLabel::from_twice(2, 1);
  CHECK(c.get(rep, 0) == Surd(Rational(1)));
  CHECK(c.get(rep, -1).is_zero());
  CHECK(c.get(rep, 1).is_zero());
  c.set(rep, 0, Surd::sqrt_of(2));
  CHECK(c.get(rep, 0) == Surd::sqrt_of(2));
  c.set(rep, 1, Surd(Rational(1)));
  CHECK_THROWS_AS(build_lambda(rep, 3, c), std::domain_error);
  CHECK_THROWS_AS(c.set(rep, 2, Surd(Rational(1))), std::domain_error);
}

TEST_CASE("Pauli coincidence at c = 2") {
  PauliCheckReport r = pauli_check();
  CHECK(r.ok);
  r = pauli_check(Surd(Rational(1)));
  CHECK(!r.ok);

  // sigma_2 entries are +-i at c = 2.
  LambdaMatrix lam = build_lambda(RepLabel::from_twice(1, 0), 2,
                                  CoefficientSet::uniform(Surd(Rational(2))));
  CHECK(lam.entries.at(0, 1) == img(-1));
  CHECK(lam.entries.at(1, 0) == img(1));
}

TEST_CASE("photon block at c11 = sqrt(2)") {
  CoefficientSet c = CoefficientSet::uniform(Surd::sqrt_of(2));
  LambdaMatrix l1 = build_lambda(RepLabel::from_twice(2, 0), 1, c);
  CHECK(l1.entries.at(0, 1) == rat(1));
  CHECK(l1.entries.at(1, 0) == rat(1));
  CHECK(l1.entries.at(1, 2) == rat(1));
  CHECK(l1.entries.at(2, 1) == rat(1));
  CHECK(l1.entries.at(0, 2).is_zero());
  LambdaMatrix l2 = build_lambda(RepLabel::from_twice(2, 0), 2, c);
  CHECK(l2.entries.at(0, 1) == img(-1));
  CHECK(l2.entries.at(1, 0) == img(1));
  LambdaMatrix l3 = build_lambda(RepLabel::from_twice(2, 0), 3, c);
  CHECK(l3.entries.at(0, 0) == GaussSurd(Surd::sqrt_of(2)));
  CHECK(l3.entries.at(1, 1).is_zero());
  CHECK(l3.entries.at(2, 2) == GaussSurd(-Surd::sqrt_of(2)));
}

TEST_CASE("Lambda_3 of (1,1/2) is half the sign pattern 1,0,-1,-1,0,1") {
  LambdaMatrix lam = build_lambda(RepLabel::from_twice(2, 1), 3, CoefficientSet{});
  std::int64_t expected[6] = {1, 0, -1, -1, 0, 1};
  for (int k = 0; k < 6; ++k) CHECK(lam.entries.at(k, k) == rat(expected[k], 2));
}

TEST_CASE("Lambda_1 of (2,0) tridiagonal entries") {
  LambdaMatrix lam = build_lambda(RepLabel::from_twice(4, 0), 1, CoefficientSet{});
  CHECK(lam.entries.at(0, 1) == rat(1));
  CHECK(lam.entries.at(1, 2) == GaussSurd(Surd(Rational(1, 2), 6)));
  CHECK(lam.entries.at(2, 3) == GaussSurd(Surd(Rational(1, 2), 6)));
  CHECK(lam.entries.at(3, 4) == rat(1));
  CHECK(lam.entries.is_hermitian());
}

TEST_CASE("Lambda_1 of (5/2,0) tridiagonal entries") {
  LambdaMatrix lam = build_lambda(RepLabel::from_twice(5, 0), 1, CoefficientSet{});
  CHECK(lam.entries.at(0, 1) == GaussSurd(Surd(Rational(1, 2), 5)));
  CHECK(lam.entries.at(1, 2) == GaussSurd(Surd::sqrt_of(2)));
  CHECK(lam.entries.at(2, 3) == rat(3, 2));
  CHECK(lam.entries.at(3, 4) == GaussSurd(Surd::sqrt_of(2)));
  CHECK(lam.entries.at(4, 5) == GaussSurd(Surd(Rational(1, 2), 5)));
}

TEST_CASE("full Lambda_2 displays for 3/2 and 5/2") {
  // c [[0,-i s3/2,0,0],[i s3/2,0,-i,0],[0,i,0,-i s3/2],[0,0,i s3/2,0]]
  LambdaMatrix lam = build_lambda(RepLabel::from_twice(3, 0), 2, CoefficientSet{});
  GaussSurd is3h = GaussSurd::i_times(Surd(Rational(1, 2), 3));
  OperatorMatrix want(4);
  want.set(0, 1, -is3h);
  want.set(1, 0, is3h);
  want.set(1, 2, img(-1));
  want.set(2, 1, img(1));
  want.set(2, 3, -is3h);
  want.set(3, 2, is3h);
  CHECK(lam.entries == want);

  // 5/2: off-diagonal magnitudes sqrt(5)/2, sqrt(2), 3/2, sqrt(2), sqrt(5)/2.
  lam = build_lambda(RepLabel::from_twice(5, 0), 2, CoefficientSet{});
  GaussSurd is5h = GaussSurd::i_times(Surd(Rational(1, 2), 5));
  GaussSurd is2 = GaussSurd::i_times(Surd::sqrt_of(2));
  OperatorMatrix want6(6);
  want6.set(0, 1, -is5h);
  want6.set(1, 0, is5h);
  want6.set(1, 2, -is2);
  want6.set(2, 1, is2);
  want6.set(2, 3, img(-3, 2));
  want6.set(3, 2, img(3, 2));
  want6.set(3, 4, -is2);
  want6.set(4, 3, is2);
  want6.set(4, 5, -is5h);
  want6.set(5, 4, is5h);
  CHECK(lam.entries == want6);

  // And the matching Lambda_3 diagonals: (3/2,1/2,-1/2,-3/2) and (5..-5)/2.
  lam = build_lambda(RepLabel::from_twice(5, 0), 3, CoefficientSet{});
  for (int k = 0; k < 6; ++k) CHECK(lam.entries.at(k, k) == rat(5 - 2 * k, 2));
}

TEST_CASE("alpha matrix entries") {
  auto a = mo_alpha();
  CHECK(a[2].at(0, 1) == img(1));
  CHECK(a[2].at(1, 0) == img(-1));
  CHECK(a[0].at(1, 2) == img(1));
  CHECK(a[0].at(2, 1) == img(-1));
  CHECK(a[1].at(0, 2) == img(-1));
  CHECK(a[1].at(2, 0) == img(1));
  for (const auto& m : a) {
    CHECK(m.is_hermitian());
    int nnz = 0;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) nnz += m.at(r, c).is_zero() ? 0 : 1;
    CHECK(nnz == 2);
  }
}

TEST_CASE("assembled Dirac system") {
  RweSystem sys = assemble_system(chain(RepLabel::from_twice(1, 0)), Rational(1),
                                  CoefficientSet::uniform(Surd(Rational(2))));
  REQUIRE(sys.links.size() == 2);
  CHECK(sys.links[0].rep == RepLabel::from_twice(1, 0));
  CHECK(!sys.links[0].dual_role);
  CHECK(sys.links[1].rep == RepLabel::from_twice(0, 1));
  CHECK(sys.links[1].dual_role);
  // Both blocks are the Pauli matrices at c = 2.
  for (const auto& link : sys.links)
    for (int j = 0; j < 3; ++j) CHECK(link.forward[j].entries == sys.links[0].forward[j].entries);
}

TEST_CASE("assembled quadruplet masses follow the per-link formula") {
  RweSystem sys = assemble_system(chain(RepLabel::from_twice(0, 3)), Rational(1), CoefficientSet{});
  REQUIRE(sys.links.size() == 4);
  CHECK(sys.links[0].link_mass == Rational(1));       // (0,3/2)
  CHECK(sys.links[1].link_mass == Rational(3, 2));    // (1/2,1)
  CHECK(sys.links[2].link_mass == Rational(3, 2));    // (1,1/2)
  CHECK(sys.links[3].link_mass == Rational(1));       // (3/2,0)
  CHECK(sys.links[0].dual_role);
  CHECK(sys.links[1].dual_role);
  CHECK(!sys.links[2].dual_role);
  CHECK(!sys.links[3].dual_role);
}

TEST_CASE("massless spin-1 chain reduces to the photon system") {
  RweSystem sys = assemble_system(chain(RepLabel::from_twice(2, 0)), Rational(0),
                                  CoefficientSet::uniform(Surd::sqrt_of(2)));
  REQUIRE(sys.links.size() == 2);  // (1/2,1/2) drops out
  CHECK(sys.links[0].rep == RepLabel::from_twice(2, 0));
  CHECK(!sys.links[0].dual_role);
  CHECK(sys.links[1].rep == RepLabel::from_twice(0, 2));
  CHECK(sys.links[1].dual_role);
  for (const auto& link : sys.links) CHECK(link.link_mass == Rational(0));
  // Forward block is the photon matrix at c = sqrt(2).
  CHECK(sys.links[0].forward[0].entries.at(0, 1) == rat(1));
  CHECK(sys.links[0].forward[2].entries.at(0, 0) == GaussSurd(Surd::sqrt_of(2)));
  CHECK_THROWS_AS(assemble_system(chain(RepLabel::from_twice(1, 1)), Rational(0),
                                  CoefficientSet{}),
                  std::domain_error);
}

TEST_CASE("starred interior matrices negate Lambda_1 and Lambda_2 only") {
  RepLabel rep = RepLabel::from_twice(3, 2);
  auto fwd = build_lambda_triple(rep, CoefficientSet{}, false);
  auto dual = build_lambda_triple(rep, CoefficientSet{}, true);
  CHECK(dual[0].entries == fwd[0].entries.scaled(rat(-1)));
  CHECK(dual[1].entries == fwd[1].entries.scaled(rat(-1)));
  CHECK(dual[2].entries == fwd[2].entries);
}
