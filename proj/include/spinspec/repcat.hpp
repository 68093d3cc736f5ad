#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinspec/exact.hpp"

namespace spinspec {

/// Node tau_{l,ldot} of the interlocking scheme.
struct RepLabel {
  HalfInt l;
  HalfInt ldot;

  RepLabel() = default;
  RepLabel(HalfInt l_, HalfInt ldot_) : l(l_), ldot(ldot_) {
    if (l.twice < 0 || ldot.twice < 0)
      throw std::domain_error("representation labels must be non-negative");
  }
  static RepLabel from_twice(std::int64_t two_l, std::int64_t two_ldot) {
    return RepLabel(HalfInt::from_twice(two_l), HalfInt::from_twice(two_ldot));
  }

  /// (2l+1)(2ldot+1)
  std::int64_t degree() const {
    return detail::checked_mul(l.twice + 1, ldot.twice + 1);
  }
  /// Signed spin l - ldot; the sign separates a line from its dual line.
  HalfInt spin() const { return l - ldot; }
  HalfInt spin_abs() const { return (l - ldot).abs(); }
  /// Weight l + ldot (vertical coordinate of the representation cone).
  HalfInt weight() const { return l + ldot; }
  RepLabel swapped() const { return RepLabel(ldot, l); }
  bool is_edge() const { return l.twice == 0 || ldot.twice == 0; }

  std::string to_string() const { return "(" + l.to_string() + "," + ldot.to_string() + ")"; }

  friend bool operator==(const RepLabel& a, const RepLabel& b) {
    return a.l == b.l && a.ldot == b.ldot;
  }
  friend bool operator!=(const RepLabel& a, const RepLabel& b) { return !(a == b); }
  friend bool operator<(const RepLabel& a, const RepLabel& b) {
    if (a.l != b.l) return a.l < b.l;
    return a.ldot < b.ldot;
  }
};

/// Fixed-weight sequence tau_{l,ldot}, tau_{l+1/2,ldot-1/2}, ..., tau_{ldot,l}.
struct SpinChain {
  std::vector<RepLabel> links;
};

/// Tensor-substrate shape behind a representation: k undotted and r dotted
/// factors, the induced spinspace, and the symmetric subspace.
struct SubstrateDescriptor {
  std::int64_t k = 0;
  std::int64_t r = 0;
  std::int64_t spinspace_dim = 1;  // 2^(k+r)
  std::int64_t sym_dim = 1;        // (k+1)(r+1)
};

SubstrateDescriptor substrate(const RepLabel& rep);

enum class CliffordRing { R, RR, C, H, HH };
enum class ChargeClass { charged, neutral, truly_neutral };

struct CliffordClass {
  std::int64_t p = 0;
  std::int64_t q = 0;
  int mod8 = 0;
  CliffordRing ring = CliffordRing::R;
  ChargeClass charge_class = ChargeClass::truly_neutral;
};

std::string to_string(CliffordRing r);
std::string to_string(ChargeClass c);

enum class Charge { minus_one, zero, plus_one, zero_bar };

struct ParticleStateDescriptor {
  RepLabel rep;
  SubstrateDescriptor sub;
  Charge charge = Charge::zero;
  Rational mass;  // in units of mu0
};

/// mu0 * (l + 1/2)(ldot + 1/2), exact.
Rational mass(const RepLabel& rep, const Rational& mu0);

/// SU(2) content of tau_{l,ldot}: spins (k+r)/2 down to |k-r|/2.
std::vector<HalfInt> su2_restriction(const RepLabel& rep);

/// Links from (l,ldot) to (ldot,l) in half-steps; a single link when l = ldot.
SpinChain chain(const RepLabel& rep);

/// First `count` nodes with l - ldot = s, ascending in l, starting at (s,0).
std::vector<RepLabel> spin_line(HalfInt s, int count);

struct CellIndex {
  int cell = 1;                 // 1-based chessboard cell along the main diagonal
  HalfInt boundary_distance;    // distance up to the cell's outer row
};

/// Chessboard cell of a node: with w = l + ldot, cell n covers (4n-6, 4n-2].
CellIndex cell_index(const RepLabel& rep);

/// Ring and charge class of Cl_{p,q} from (p - q) mod 8.
CliffordClass classify_clifford(std::int64_t p, std::int64_t q);

/// ln 63 / ln 8, the carpet dimension of the substrate's mod-8 structure.
double fractal_dimension();

}  // namespace spinspec
