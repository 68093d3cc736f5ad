#pragma once

#include <complex>
#include <vector>

#include "spinspec/exact.hpp"

namespace spinspec {

/// Principal branch of log Gamma(z) on the complex plane (Lanczos with
/// reflection for Re z < 1/2).
std::complex<double> log_gamma(std::complex<double> z);

inline std::complex<double> complex_gamma(std::complex<double> z) {
  return std::exp(log_gamma(z));
}

/// Gauss series sum of 2F1(a,b;c;z). Terminating cases (a or b a
/// non-positive integer) are summed in finitely many terms; otherwise |z| < 1
/// is required and the series stops once |term| < tol * |sum|. A
/// non-positive-integer c reached before termination throws: that parameter
/// range belongs to the regularized path.
std::complex<double> gauss_2f1(std::complex<double> a, std::complex<double> b,
                               std::complex<double> c, std::complex<double> z,
                               double tol = 1e-12);

/// Regularized 2F1(a,b;c;z)/Gamma(c), entire in c; at c = -N the series
/// identity z^{N+1} (a)_{N+1} (b)_{N+1} / (N+1)! * 2F1(a+N+1,b+N+1;N+2;z)
/// applies.
std::complex<double> gauss_2f1_regularized(std::complex<double> a, std::complex<double> b,
                                           std::complex<double> c, std::complex<double> z,
                                           double tol = 1e-12);

/// Parameters of the principal-series hyperspherical function
/// M^{-1/2+i rho, l0}_{mn}. The prefactor carries two independent
/// rapidity-like parameters: eps_m pairs with phi, eps_n with psi.
struct HsfParams {
  double rho = 0.0;
  HalfInt l0;
  HalfInt m;
  HalfInt n;
  double theta = 0.0;  // [0, pi)
  double tau = 0.0;    // >= 0, tanh^2(tau/2) <= 1 - 1e-6
  double phi = 0.0;
  double psi = 0.0;
  double eps_m = 0.0;
  double eps_n = 0.0;
};

/// Evaluates the hyperspherical function: exponential prefactor, Gamma-ratio
/// square root via log_gamma, and the finite t-sum of two-2F1 products.
/// Terms whose 2F1 has a non-positive-integer denominator parameter
/// (t > m on the theta side, t < n on the tau side) are folded through the
/// regularized series, which also absorbs the negative tan/tanh powers.
std::complex<double> hyperspherical_m(const HsfParams& p, double tol = 1e-12);

/// The individual summands of the t-sum (prefactors excluded), t ascending
/// from -l0 to l0.
std::vector<std::complex<double>> hyperspherical_terms(const HsfParams& p, double tol = 1e-12);

}  // namespace spinspec
