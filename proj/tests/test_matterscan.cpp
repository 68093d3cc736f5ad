#include "doctest.h"
#include "spinspec/matterscan.hpp"

using namespace spinspec;

TEST_CASE("stability search lands on the proton node") {
  StabilityResult r = stability_search(1836.57);
  CHECK(r.rep == RepLabel::from_twice(30, 29));
  CHECK(r.degree == 930);
  CHECK(r.cell == 8);
  CHECK(r.boundary_distance.twice == 1);

  CHECK(stability_search(4.0).rep == RepLabel::from_twice(1, 0));
  CHECK(stability_search(12.0).rep == RepLabel::from_twice(2, 1));
  CHECK_THROWS_AS(stability_search(0.5), std::domain_error);
}

TEST_CASE("tie break goes to the larger degree") {
  // target 4 sits exactly between degrees 2 and 6.
  CHECK(stability_search(8.0).degree == 6);
}

TEST_CASE("proton census multiplicity structure") {
  CensusReport c = proton_census();
  CHECK(c.distinct_count == 329);
  CHECK(c.consistency_sum == 930);
  CHECK(c.multiplicity_histogram.at(8) == 4);
  CHECK(c.multiplicity_histogram.at(6) == 18);
  CHECK(c.multiplicity_histogram.at(4) == 74);
  CHECK(c.multiplicity_histogram.at(2) == 232);
  CHECK(c.multiplicity_histogram.at(30) == 1);

  std::vector<Rational> mult8 = {Rational(-45, 2), Rational(-15, 2), Rational(15, 2),
                                 Rational(45, 2)};
  CHECK(c.classes.at(8) == mult8);
  CHECK(c.classes.at(30) == std::vector<Rational>{Rational(0)});

  // 30 + 4*8 + 18*6 + 74*4 + 232*2 = 930
  CHECK(30 + 4 * 8 + 18 * 6 + 74 * 4 + 232 * 2 == 930);
}

TEST_CASE("matter table enumeration") {
  auto rows = matter_table(HalfInt::whole(1), Rational(1));
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].rep == RepLabel::from_twice(0, 0));
  CHECK(rows[1].rep == RepLabel::from_twice(1, 0));
  CHECK(rows[2].rep == RepLabel::from_twice(0, 1));
  CHECK(rows[3].rep == RepLabel::from_twice(2, 0));
  CHECK(rows[4].rep == RepLabel::from_twice(1, 1));
  CHECK(rows[5].rep == RepLabel::from_twice(0, 2));

  CHECK(rows[4].spin.twice == 0);
  CHECK(rows[4].degree == 4);
  CHECK(rows[4].mass == Rational(1));
  CHECK(rows[4].cell == 1);

  auto big = matter_table(HalfInt::from_twice(59), Rational(1));
  bool found = false;
  for (const auto& row : big)
    if (row.rep == RepLabel::from_twice(30, 29)) {
      found = true;
      CHECK(row.cell == 8);
      CHECK(row.mass == Rational(465, 2));
    }
  CHECK(found);
}
