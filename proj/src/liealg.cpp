#include "spinspec/liealg.hpp"

namespace spinspec {

OperatorMatrix OperatorMatrix::identity(int dim) {
  OperatorMatrix m(dim);
  for (int k = 0; k < dim; ++k) m.set(k, k, GaussSurd(Rational(1)));
  return m;
}

bool OperatorMatrix::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

bool OperatorMatrix::is_diagonal() const {
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      if (r != c && !at(r, c).is_zero()) return false;
  return true;
}

bool OperatorMatrix::is_tridiagonal() const {
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      if (std::abs(r - c) > 1 && !at(r, c).is_zero()) return false;
  return true;
}

bool OperatorMatrix::is_hermitian() const {
  for (int r = 0; r < dim_; ++r)
    for (int c = r; c < dim_; ++c)
      if (at(r, c) != at(c, r).conj()) return false;
  return true;
}

OperatorMatrix OperatorMatrix::adjoint() const {
  OperatorMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m.set(c, r, at(r, c).conj());
  return m;
}

OperatorMatrix OperatorMatrix::scaled(const GaussSurd& s) const {
  OperatorMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m.set(r, c, at(r, c) * s);
  return m;
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim_ != b.dim_) throw std::domain_error("matrix dimension mismatch");
  OperatorMatrix m(a.dim_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = a.e_[k] + b.e_[k];
  return m;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim_ != b.dim_) throw std::domain_error("matrix dimension mismatch");
  OperatorMatrix m(a.dim_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = a.e_[k] - b.e_[k];
  return m;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim_ != b.dim_) throw std::domain_error("matrix dimension mismatch");
  OperatorMatrix m(a.dim_);
  for (int r = 0; r < a.dim_; ++r)
    for (int c = 0; c < a.dim_; ++c) {
      GaussSurd acc;
      for (int k = 0; k < a.dim_; ++k) {
        const GaussSurd& x = a.at(r, k);
        if (x.is_zero()) continue;
        const GaussSurd& y = b.at(k, c);
        if (y.is_zero()) continue;
        acc += x * y;
      }
      m.set(r, c, acc);
    }
  return m;
}

std::vector<std::complex<double>> OperatorMatrix::to_complex() const {
  std::vector<std::complex<double>> out(e_.size());
  for (std::size_t k = 0; k < e_.size(); ++k)
    out[k] = std::complex<double>(e_[k].real_part(), e_[k].imag_part());
  return out;
}

OperatorMatrix kron(const OperatorMatrix& outer, const OperatorMatrix& inner) {
  int n = outer.dim(), m = inner.dim();
  OperatorMatrix out(n * m);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const GaussSurd& o = outer.at(i, k);
      if (o.is_zero()) continue;
      for (int j = 0; j < m; ++j)
        for (int l = 0; l < m; ++l) {
          const GaussSurd& v = inner.at(j, l);
          if (v.is_zero()) continue;
          out.set(i * m + j, k * m + l, o * v);
        }
    }
  return out;
}

namespace {

// twice-values of m for row/col index k in the descending basis.
std::int64_t tw_m(std::int64_t two_l, int k) { return two_l - 2 * k; }

// sqrt((l+m)(l-m+1)) as an exact surd; both factors are integers.
Surd lowering_root(std::int64_t two_l, std::int64_t two_m) {
  std::int64_t a = (two_l + two_m) / 2;
  std::int64_t b = (two_l - two_m) / 2 + 1;
  return Surd(Rational(1), a * b);
}

}  // namespace

Su2Triple su2_generators(std::int64_t two_l) {
  if (two_l < 0) throw std::domain_error("negative spin label");
  int dim = static_cast<int>(two_l) + 1;
  Su2Triple t{OperatorMatrix(dim), OperatorMatrix(dim), OperatorMatrix(dim)};
  Rational half(1, 2);
  for (int col = 0; col < dim; ++col) {
    std::int64_t twm = tw_m(two_l, col);
    t.j3.set(col, col, GaussSurd(Surd(Rational(twm, 2))));
    if (twm - 2 >= -two_l) {  // J- part: row m-1
      Surd c = lowering_root(two_l, twm);
      t.j1.set(col + 1, col, GaussSurd(c * Surd(half)));
      t.j2.set(col + 1, col, GaussSurd::i_times(c * Surd(half)));
    }
    if (twm + 2 <= two_l) {  // J+ part: row m+1
      Surd c = lowering_root(two_l, -twm);  // sqrt((l-m)(l+m+1))
      t.j1.set(col - 1, col, GaussSurd(c * Surd(half)));
      t.j2.set(col - 1, col, GaussSurd::i_times(-(c * Surd(half))));
    }
  }
  return t;
}

EnvelopeXY envelope_xy(const RepLabel& rep) {
  Su2Triple ju = su2_generators(rep.l.twice);
  Su2Triple jd = su2_generators(rep.ldot.twice);
  OperatorMatrix iu = OperatorMatrix::identity(static_cast<int>(rep.l.twice) + 1);
  OperatorMatrix id = OperatorMatrix::identity(static_cast<int>(rep.ldot.twice) + 1);
  EnvelopeXY env;
  env.rep = rep;
  env.x = {kron(id, ju.j1), kron(id, ju.j2), kron(id, ju.j3)};
  env.y = {kron(jd.j1, iu), kron(jd.j2, iu), kron(jd.j3, iu)};
  return env;
}

LorentzAB ab_from_xy(const EnvelopeXY& env) {
  LorentzAB out;
  GaussSurd minus_i = GaussSurd::i_times(Surd(Rational(-1)));
  for (int k = 0; k < 3; ++k) {
    out.a[k] = (env.x[k] + env.y[k]).scaled(minus_i);
    out.b[k] = env.y[k] - env.x[k];
  }
  return out;
}

std::array<OperatorMatrix, 3> commut_generators(const RepLabel& rep) {
  EnvelopeXY env = envelope_xy(rep);
  GaussSurd minus_i = GaussSurd::i_times(Surd(Rational(-1)));
  std::array<OperatorMatrix, 3> a;
  for (int k = 0; k < 3; ++k) a[k] = (env.x[k] - env.y[k]).scaled(minus_i);
  return a;
}

LadderResult ladder_apply(const RepLabel& rep, LadderOp which, HalfInt m, HalfInt mdot) {
  if (m.abs() > rep.l || mdot.abs() > rep.ldot)
    throw std::domain_error("state (" + m.to_string() + "," + mdot.to_string() +
                            ") outside representation " + rep.to_string());
  LadderResult r{Surd(Rational(0)), m, mdot};
  switch (which) {
    case LadderOp::X3:
      r.coefficient = Surd(m.to_rational());
      break;
    case LadderOp::Y3:
      r.coefficient = Surd(mdot.to_rational());
      break;
    case LadderOp::XMinus:
      if (m > -rep.l) {
        r.coefficient = lowering_root(rep.l.twice, m.twice);
        r.m = m - HalfInt::whole(1);
      }
      break;
    case LadderOp::XPlus:
      if (m < rep.l) {
        r.coefficient = lowering_root(rep.l.twice, -m.twice);
        r.m = m + HalfInt::whole(1);
      }
      break;
    case LadderOp::YMinus:
      if (mdot > -rep.ldot) {
        r.coefficient = lowering_root(rep.ldot.twice, mdot.twice);
        r.mdot = mdot - HalfInt::whole(1);
      }
      break;
    case LadderOp::YPlus:
      if (mdot < rep.ldot) {
        r.coefficient = lowering_root(rep.ldot.twice, -mdot.twice);
        r.mdot = mdot + HalfInt::whole(1);
      }
      break;
  }
  return r;
}

}  // namespace spinspec
