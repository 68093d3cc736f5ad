#pragma once

#include <map>
#include <vector>

#include "spinspec/repcat.hpp"
#include "spinspec/spectral.hpp"

namespace spinspec {

struct StabilityResult {
  RepLabel rep;
  std::int64_t degree = 0;
  double target_degree = 0.0;
  double ratio_used = 0.0;
  int cell = 1;
  HalfInt boundary_distance;
};

/// Locates the spin-1/2-line representation whose degree is closest to
/// ratio/2; ties break toward the larger degree.
StabilityResult stability_search(double ratio);

struct CensusReport {
  int distinct_count = 0;
  std::map<int, int> multiplicity_histogram;            // multiplicity -> #distinct eigenvalues
  std::map<int, std::vector<Rational>> classes;         // multiplicity -> eigenvalues, ascending
  std::int64_t consistency_sum = 0;                     // sum of multiplicities
};

CensusReport census_from_profile(const DegeneracyProfile& prof);

/// Full spectral census of Lambda^{15,29/2}_3 at c = 1, recomputed from the
/// diagonal products.
CensusReport proton_census();

struct MatterRow {
  RepLabel rep;
  HalfInt spin;  // signed l - ldot
  std::int64_t degree = 0;
  Rational mass;
  int cell = 1;
};

/// One row per cone node with l + ldot <= max_weight, weight-major,
/// descending l within a weight.
std::vector<MatterRow> matter_table(HalfInt max_weight, const Rational& mu0);

}  // namespace spinspec
