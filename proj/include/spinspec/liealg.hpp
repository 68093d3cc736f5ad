#pragma once

#include <array>
#include <complex>
#include <vector>

#include "spinspec/exact.hpp"
#include "spinspec/repcat.hpp"

namespace spinspec {

/// Dense square matrix of exact entries in the helicity basis (mdot outer
/// descending, m inner descending).
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  explicit OperatorMatrix(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim) {}
  static OperatorMatrix identity(int dim);

  int dim() const { return dim_; }
  const GaussSurd& at(int r, int c) const { return e_[idx(r, c)]; }
  void set(int r, int c, const GaussSurd& v) { e_[idx(r, c)] = v; }
  void add_to(int r, int c, const GaussSurd& v) { e_[idx(r, c)] += v; }

  bool is_zero() const;
  bool is_diagonal() const;
  bool is_tridiagonal() const;
  bool is_hermitian() const;

  OperatorMatrix adjoint() const;
  OperatorMatrix scaled(const GaussSurd& s) const;

  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }
  friend bool operator!=(const OperatorMatrix& a, const OperatorMatrix& b) { return !(a == b); }

  std::vector<std::complex<double>> to_complex() const;

 private:
  std::size_t idx(int r, int c) const {
    if (r < 0 || c < 0 || r >= dim_ || c >= dim_) throw std::out_of_range("matrix index");
    return static_cast<std::size_t>(r) * dim_ + c;
  }
  int dim_ = 0;
  std::vector<GaussSurd> e_;
};

inline OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a * b - b * a;
}

/// Kronecker product; `outer` indexes the slow (dotted) factor.
OperatorMatrix kron(const OperatorMatrix& outer, const OperatorMatrix& inner);

struct Su2Triple {
  OperatorMatrix j1, j2, j3;
};

/// Standard (2l+1)-dimensional angular momentum matrices in the descending-m
/// basis: J3 = diag(l..-l), J+- with the usual sqrt((l-+m)(l+-m+1)) entries.
Su2Triple su2_generators(std::int64_t two_l);

/// Commuting su(2) pairs of the complex envelope: X acts on the undotted
/// tensor factor, Y on the dotted one, both realized on kets.
struct EnvelopeXY {
  RepLabel rep;
  std::array<OperatorMatrix, 3> x;
  std::array<OperatorMatrix, 3> y;
};

EnvelopeXY envelope_xy(const RepLabel& rep);

/// Group-algebra generators recovered from the envelope:
/// A_i = -i(X_i + Y_i) (anti-Hermitian), B_i = Y_i - X_i (Hermitian).
struct LorentzAB {
  std::array<OperatorMatrix, 3> a;
  std::array<OperatorMatrix, 3> b;
};

LorentzAB ab_from_xy(const EnvelopeXY& env);

/// The tensor-difference combination A^l_i (x) 1 - 1 (x) A^ldot_i used by the
/// commutator construction of the wave-equation matrices. Equals i*B_i in
/// this realization.
std::array<OperatorMatrix, 3> commut_generators(const RepLabel& rep);

enum class LadderOp { XPlus, XMinus, YPlus, YMinus, X3, Y3 };

struct LadderResult {
  Surd coefficient;  // 0 on edge annihilation
  HalfInt m;
  HalfInt mdot;
};

/// Single ladder action on a basis ket |l,m;ldot,mdot>. Throws if the state
/// is outside the representation.
LadderResult ladder_apply(const RepLabel& rep, LadderOp which, HalfInt m, HalfInt mdot);

}  // namespace spinspec
