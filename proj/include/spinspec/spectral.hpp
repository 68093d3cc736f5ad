#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinspec/exact.hpp"
#include "spinspec/rwegen.hpp"

namespace spinspec {

/// Raised when a matrix shape has no exact characteristic-polynomial route;
/// callers fall back to the numeric path.
struct unsupported_shape : std::domain_error {
  explicit unsupported_shape(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a numeric eigenvalue does not sit on the half-integer grid
/// within tolerance.
struct snap_failure : std::domain_error {
  explicit snap_failure(const std::string& what) : std::domain_error(what) {}
};

/// Eigenvalue -> algebraic multiplicity. Keys are exact rationals: interior
/// representations with two half-odd labels put Lambda_3 eigenvalues on the
/// quarter grid.
struct DegeneracyProfile {
  std::map<Rational, int> entries;

  std::int64_t total() const {
    std::int64_t s = 0;
    for (const auto& [e, m] : entries) s += m;
    return s;
  }
  int distinct() const { return static_cast<int>(entries.size()); }
  bool negation_symmetric() const {
    for (const auto& [e, m] : entries) {
      auto it = entries.find(-e);
      if (it == entries.end() || it->second != m) return false;
    }
    return true;
  }
};

enum class SpectrumClass { simple, degenerate };

struct EigenClass {
  Rational eig;
  int alg = 0;
  int geom = 0;
};

struct SpectrumReport {
  RepLabel rep;
  int j = 3;
  bool dual = false;
  // Zero polynomial when the expanded coefficients exceed the integer range
  // (very large diagonal blocks); the profile then carries the factored form.
  RationalPolynomial charpoly;
  std::vector<EigenClass> profile;  // ascending eigenvalue
  int distinct_count = 0;
  SpectrumClass classification = SpectrumClass::simple;
};

std::string to_string(SpectrumClass c);

/// Factored rendering "(x-3/2)^2 (x-1/2)^2 x^4 ..." of the algebraic
/// multiplicities, eigenvalues descending.
std::string divisor_string(const SpectrumReport& r, const std::string& var = "x");

/// Exact det(lambda*I - M). Supported shapes: diagonal with rational or
/// +/- paired irrational entries, and Hermitian tridiagonal with rational
/// diagonal (the three-term recurrence needs only |b_k|^2, which is always
/// rational). Anything else throws unsupported_shape.
RationalPolynomial charpoly_exact(const OperatorMatrix& m);

inline RationalPolynomial charpoly_exact(const LambdaMatrix& m) {
  return charpoly_exact(m.entries);
}

/// Exact eigenvalue multiplicities: diagonal counting when the matrix is
/// diagonal with rational entries, otherwise grid-root extraction from the
/// exact characteristic polynomial.
DegeneracyProfile profile(const OperatorMatrix& m);

inline DegeneracyProfile profile(const LambdaMatrix& m) { return profile(m.entries); }

/// Numeric oracle: Hermitian eigensolve, then snap each eigenvalue to the
/// half-integer grid. Residual above tol throws snap_failure.
DegeneracyProfile spectrum_numeric(const OperatorMatrix& m, double tol);

/// Numeric multiplicity histogram with eigenvalues clustered at `tol`;
/// no grid assumption. Used where the spectrum is irrational.
std::vector<int> numeric_multiplicities(const OperatorMatrix& m, double tol);

SpectrumReport classify(const LambdaMatrix& m);

}  // namespace spinspec
