#pragma once

#include <array>
#include <map>
#include <tuple>
#include <vector>

#include "spinspec/liealg.hpp"
#include "spinspec/repcat.hpp"

namespace spinspec {

/// Canonical ket order |l,m;ldot,mdot>: mdot outer descending, m inner
/// descending. Lambda_3 is diagonal in this order.
struct HelicityBasis {
  RepLabel rep;
  std::vector<std::pair<HalfInt, HalfInt>> order;  // (m, mdot)
};

HelicityBasis basis(const RepLabel& rep);
int basis_index(const RepLabel& rep, HalfInt m, HalfInt mdot);

/// Interlocking constants c_{l',l}(;ldot',ldot). Diagonal pairs default to 1,
/// the (l+-1, l) pairs to 0; values may be rational or surd.
class CoefficientSet {
 public:
  /// offset: -1, 0, +1 selects c_{l-1,l}, c_{l,l}, c_{l+1,l} (and the matched
  /// dotted pair for interior representations).
  Surd get(const RepLabel& rep, int offset) const;
  void set(const RepLabel& rep, int offset, const Surd& value);

  /// Same diagonal constant for every representation.
  static CoefficientSet uniform(const Surd& diagonal);

 private:
  Surd default_for(int offset) const {
    return offset == 0 ? Surd(Rational(1)) : Surd(Rational(0));
  }
  std::map<std::tuple<std::int64_t, std::int64_t, int>, Surd> values_;
  bool has_uniform_ = false;
  Surd uniform_diag_;
};

struct LambdaMatrix {
  RepLabel rep;
  int j = 3;          // axis 1..3
  bool dual = false;  // starred variant
  OperatorMatrix entries;
};

/// Wave-equation matrix Lambda^{l,ldot}_j in the helicity basis. Edge
/// representations use the single-index element tables; interior ones the
/// two-index tables, with the starred variant selected by `dual`.
/// Non-zero (l+-1, l) coefficients are rejected: those elements couple to a
/// neighbouring representation and do not fit a single square block.
LambdaMatrix build_lambda(const RepLabel& rep, int j, const CoefficientSet& coeffs,
                          bool dual = false);

std::array<LambdaMatrix, 3> build_lambda_triple(const RepLabel& rep,
                                                const CoefficientSet& coeffs,
                                                bool dual = false);

/// The three 3x3 photon spin matrices of the Dirac-like field equations.
std::array<OperatorMatrix, 3> mo_alpha();

/// One chain link: both matrix triples, the link mass, and which sign
/// pattern its equation carries in the assembled system (dual links are the
/// ones with l < ldot).
struct RweLink {
  RepLabel rep;
  std::array<LambdaMatrix, 3> forward;
  std::array<LambdaMatrix, 3> dual;
  Rational link_mass;
  bool dual_role = false;
};

struct RweSystem {
  SpinChain chain;
  Rational mu0;
  std::vector<RweLink> links;
};

RweSystem assemble_system(const SpinChain& chain, const Rational& mu0,
                          const CoefficientSet& coeffs);

struct PauliCheckReport {
  bool ok = false;
  std::array<bool, 3> axis_match{false, false, false};
  std::string note;
};

/// Checks Lambda^{1/2,0}_j against sigma_j entrywise at the given diagonal
/// coefficient (2 reproduces the Pauli matrices exactly).
PauliCheckReport pauli_check(const Surd& c = Surd(Rational(2)));

}  // namespace spinspec
