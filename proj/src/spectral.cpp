#include "spinspec/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace spinspec {

std::string to_string(SpectrumClass c) {
  return c == SpectrumClass::simple ? "simple" : "degenerate";
}

std::string divisor_string(const SpectrumReport& r, const std::string& var) {
  std::string out;
  for (auto it = r.profile.rbegin(); it != r.profile.rend(); ++it) {
    if (!out.empty()) out += " ";
    if (it->eig.is_zero()) {
      out += var;
    } else if (it->eig.sign() > 0) {
      out += "(" + var + "-" + it->eig.to_string() + ")";
    } else {
      out += "(" + var + "+" + (-it->eig).to_string() + ")";
    }
    if (it->alg > 1) out += "^" + std::to_string(it->alg);
  }
  return out;
}

namespace {

RationalPolynomial charpoly_diagonal(const OperatorMatrix& m) {
  // Multiply out (x - d_k); irrational entries must come in +/- pairs so the
  // pair contributes the rational quadratic x^2 - d^2.
  std::vector<Surd> irrational;
  RationalPolynomial p = RationalPolynomial::constant(Rational(1));
  for (int k = 0; k < m.dim(); ++k) {
    const GaussSurd& e = m.at(k, k);
    if (e.is_imaginary())
      throw unsupported_shape("imaginary diagonal entry in characteristic polynomial");
    const Surd& s = e.magnitude_part();
    if (s.is_rational()) {
      p = p * RationalPolynomial::linear_root(s.as_rational());
      continue;
    }
    auto it = std::find(irrational.begin(), irrational.end(), -s);
    if (it != irrational.end()) {
      p = p * RationalPolynomial({-s.squared(), Rational(0), Rational(1)});
      irrational.erase(it);
    } else {
      irrational.push_back(s);
    }
  }
  if (!irrational.empty())
    throw unsupported_shape("unpaired irrational diagonal entry " + irrational.front().to_string());
  return p;
}

RationalPolynomial charpoly_tridiagonal(const OperatorMatrix& m) {
  int n = m.dim();
  std::vector<Rational> d(static_cast<std::size_t>(n));
  std::vector<Rational> b2(static_cast<std::size_t>(n), Rational(0));  // |b_k|^2, k >= 1
  for (int k = 0; k < n; ++k) {
    const GaussSurd& e = m.at(k, k);
    if (e.is_imaginary() || !e.magnitude_part().is_rational())
      throw unsupported_shape("tridiagonal recurrence needs a rational diagonal");
    d[static_cast<std::size_t>(k)] = e.magnitude_part().as_rational();
    if (k > 0) {
      if (m.at(k, k - 1) != m.at(k - 1, k).conj())
        throw unsupported_shape("tridiagonal matrix is not Hermitian");
      b2[static_cast<std::size_t>(k)] = m.at(k, k - 1).abs_squared();
    }
  }
  // p_k = (x - d_k) p_{k-1} - |b_k|^2 p_{k-2}
  RationalPolynomial pm1 = RationalPolynomial::constant(Rational(1));
  RationalPolynomial p = RationalPolynomial({-d[0], Rational(1)});
  for (int k = 1; k < n; ++k) {
    RationalPolynomial next = RationalPolynomial({-d[static_cast<std::size_t>(k)], Rational(1)}) * p -
                              RationalPolynomial::constant(b2[static_cast<std::size_t>(k)]) * pm1;
    pm1 = std::move(p);
    p = std::move(next);
  }
  return p;
}

Eigen::MatrixXcd to_eigen(const OperatorMatrix& m) {
  Eigen::MatrixXcd out(m.dim(), m.dim());
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      out(r, c) = std::complex<double>(m.at(r, c).real_part(), m.at(r, c).imag_part());
  return out;
}

}  // namespace

RationalPolynomial charpoly_exact(const OperatorMatrix& m) {
  if (m.dim() == 0) throw std::domain_error("empty matrix");
  if (m.is_diagonal()) return charpoly_diagonal(m);
  if (m.is_tridiagonal()) return charpoly_tridiagonal(m);
  throw unsupported_shape("no exact characteristic-polynomial route for this shape");
}

DegeneracyProfile profile(const OperatorMatrix& m) {
  DegeneracyProfile out;
  if (m.is_diagonal()) {
    for (int k = 0; k < m.dim(); ++k) {
      const GaussSurd& e = m.at(k, k);
      if (e.is_imaginary() || !e.magnitude_part().is_rational())
        throw std::domain_error("non-rational eigenvalue " + e.to_string() +
                                " outside the profile domain");
      out.entries[e.magnitude_part().as_rational()]++;
    }
    return out;
  }
  GridRoots roots = poly_halfint_roots(charpoly_exact(m));
  if (roots.remainder.degree() > 0)
    throw std::domain_error("eigenvalues off the half-integer grid; remainder factor " +
                            roots.remainder.to_string("x"));
  for (const auto& [r, mult] : roots.roots) out.entries[r.to_rational()] += mult;
  return out;
}

DegeneracyProfile spectrum_numeric(const OperatorMatrix& m, double tol) {
  if (!(tol > 0.0 && tol < 0.25)) throw std::domain_error("snap tolerance must be in (0, 1/4)");
  if (!m.is_hermitian()) throw std::domain_error("numeric spectrum path expects a Hermitian matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed to converge");
  DegeneracyProfile out;
  for (int k = 0; k < m.dim(); ++k) {
    double ev = solver.eigenvalues()(k);
    double snapped = std::round(2.0 * ev) / 2.0;
    if (std::abs(ev - snapped) > tol)
      throw snap_failure("eigenvalue " + std::to_string(ev) +
                         " is off the half-integer grid beyond tol");
    out.entries[Rational(static_cast<std::int64_t>(std::llround(2.0 * ev)), 2)]++;
  }
  // Cross-check against the exact route whenever the shape supports one.
  try {
    GridRoots roots = poly_halfint_roots(charpoly_exact(m));
    DegeneracyProfile exact;
    for (const auto& [r, mult] : roots.roots) exact.entries[r.to_rational()] += mult;
    if (roots.remainder.degree() > 0 || exact.entries != out.entries)
      throw std::runtime_error("numeric spectrum disagrees with the exact characteristic polynomial");
  } catch (const unsupported_shape&) {
  } catch (const overflow_error&) {
  }
  return out;
}

std::vector<int> numeric_multiplicities(const OperatorMatrix& m, double tol) {
  if (!m.is_hermitian()) throw std::domain_error("numeric spectrum path expects a Hermitian matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed to converge");
  std::vector<int> mults;
  for (int k = 0; k < m.dim(); ++k) {
    if (k > 0 && std::abs(solver.eigenvalues()(k) - solver.eigenvalues()(k - 1)) <= tol)
      ++mults.back();
    else
      mults.push_back(1);
  }
  return mults;
}

SpectrumReport classify(const LambdaMatrix& m) {
  SpectrumReport rep;
  rep.rep = m.rep;
  rep.j = m.j;
  rep.dual = m.dual;
  try {
    rep.charpoly = charpoly_exact(m.entries);
  } catch (const overflow_error&) {
    // Expanded coefficients of very large blocks exceed the integer range;
    // the factored form below (profile) carries the same information.
  }
  DegeneracyProfile prof = profile(m.entries);

  const OperatorMatrix& mat = m.entries;
  bool diagonal = mat.is_diagonal();
  bool unreduced_tridiagonal = false;
  if (!diagonal && mat.is_tridiagonal()) {
    unreduced_tridiagonal = true;
    for (int k = 1; k < mat.dim(); ++k)
      if (mat.at(k, k - 1).is_zero()) unreduced_tridiagonal = false;
  }

  bool simple = true;
  for (const auto& [eig, alg] : prof.entries) {
    EigenClass ec;
    ec.eig = eig;
    ec.alg = alg;
    if (diagonal) {
      // rank(lambda*I - M) = dim - (count of diagonal entries equal to lambda)
      ec.geom = alg;
    } else if (unreduced_tridiagonal) {
      // rank(lambda*I - M) >= dim - 1 for an unreduced tridiagonal matrix
      ec.geom = 1;
    } else {
      // Hermitian fallback: numeric rank of lambda*I - M
      Eigen::MatrixXcd a = to_eigen(mat);
      for (int k = 0; k < mat.dim(); ++k) a(k, k) -= eig.to_double();
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
      double cutoff = 1e-9 * std::max(1.0, svd.singularValues()(0));
      int rank = 0;
      for (int k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()(k) > cutoff) ++rank;
      ec.geom = mat.dim() - rank;
    }
    simple = simple && alg == 1;
    rep.profile.push_back(ec);
  }
  rep.distinct_count = prof.distinct();
  rep.classification = simple ? SpectrumClass::simple : SpectrumClass::degenerate;
  return rep;
}

}  // namespace spinspec
