#include "spinspec/matterscan.hpp"

#include <cmath>

#include "spinspec/rwegen.hpp"

namespace spinspec {

StabilityResult stability_search(double ratio) {
  if (!(ratio > 1.0)) throw std::domain_error("mass ratio must exceed 1");
  double target = ratio / 2.0;
  // Degrees along the spin-1/2 line (l, l-1/2) grow as n(n+1), n = 2*(l-1/4)+...;
  // walk until the degree passes the target, then compare the two neighbours.
  std::int64_t best_n = 1;
  double best_err = std::abs(2.0 - target);
  for (std::int64_t n = 2;; ++n) {
    double deg = static_cast<double>(n) * static_cast<double>(n + 1);
    double err = std::abs(deg - target);
    if (err <= best_err) {  // ties go to the larger degree
      best_err = err;
      best_n = n;
    }
    if (deg > target) break;
  }
  RepLabel rep = RepLabel::from_twice(best_n, best_n - 1);
  CellIndex ci = cell_index(rep);
  StabilityResult out;
  out.rep = rep;
  out.degree = rep.degree();
  out.target_degree = target;
  out.ratio_used = ratio;
  out.cell = ci.cell;
  out.boundary_distance = ci.boundary_distance;
  return out;
}

CensusReport census_from_profile(const DegeneracyProfile& prof) {
  CensusReport out;
  out.distinct_count = prof.distinct();
  for (const auto& [eig, mult] : prof.entries) {
    out.multiplicity_histogram[mult]++;
    out.classes[mult].push_back(eig);
    out.consistency_sum += mult;
  }
  return out;
}

CensusReport proton_census() {
  RepLabel rep = RepLabel::from_twice(30, 29);
  LambdaMatrix lam = build_lambda(rep, 3, CoefficientSet{});
  return census_from_profile(profile(lam));
}

std::vector<MatterRow> matter_table(HalfInt max_weight, const Rational& mu0) {
  if (max_weight.twice < 0) throw std::domain_error("max_weight must be non-negative");
  std::vector<MatterRow> rows;
  for (std::int64_t tw = 0; tw <= max_weight.twice; ++tw) {
    // weight w = tw/2; nodes (l, w - l) for 2l = tw down to 0
    for (std::int64_t tl = tw; tl >= 0; --tl) {
      RepLabel rep = RepLabel::from_twice(tl, tw - tl);
      MatterRow row;
      row.rep = rep;
      row.spin = rep.spin();
      row.degree = rep.degree();
      row.mass = mass(rep, mu0);
      row.cell = cell_index(rep).cell;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace spinspec
