#include "spinspec/special.hpp"

#include <cmath>

namespace spinspec {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool near_nonpositive_integer(std::complex<double> x, long* n_out,
                              double eps = 1e-12) {
  if (std::abs(x.imag()) > eps) return false;
  double r = std::round(x.real());
  if (std::abs(x.real() - r) > eps) return false;
  if (r > 0.5) return false;
  if (n_out) *n_out = static_cast<long>(-r);
  return true;
}

std::complex<double> pochhammer(std::complex<double> x, long n) {
  std::complex<double> r(1.0, 0.0);
  for (long j = 0; j < n; ++j) r *= x + static_cast<double>(j);
  return r;
}

double factorial(long n) {
  double r = 1.0;
  for (long j = 2; j <= n; ++j) r *= static_cast<double>(j);
  return r;
}

// Series with known termination index (stop), or stop < 0 for the
// tolerance-controlled sum.
std::complex<double> series_2f1(std::complex<double> a, std::complex<double> b,
                                std::complex<double> c, std::complex<double> z, double tol,
                                long stop) {
  std::complex<double> term(1.0, 0.0), sum(1.0, 0.0);
  long k = 0;
  const long max_iter = 2000000;
  while (true) {
    if (stop >= 0 && k >= stop) break;
    std::complex<double> denom = (c + static_cast<double>(k)) * static_cast<double>(k + 1);
    if (std::abs(denom) == 0.0)
      throw std::domain_error("2F1 series hit a pole of the denominator parameter");
    term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) / denom * z;
    sum += term;
    ++k;
    if (stop < 0 && std::abs(term) < tol * std::abs(sum)) break;
    if (k > max_iter) throw std::runtime_error("2F1 series did not converge");
  }
  return sum;
}

long termination_index(std::complex<double> a, std::complex<double> b) {
  long na = -1, nb = -1;
  bool ta = near_nonpositive_integer(a, &na);
  bool tb = near_nonpositive_integer(b, &nb);
  if (ta && tb) return std::min(na, nb);
  if (ta) return na;
  if (tb) return nb;
  return -1;
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  // Continuous branch: shift with lgGamma(z) = lgGamma(z+1) - Log(z) until the
  // Lanczos region, principal Log at every step. Reproduces the standard
  // loggamma (imaginary part accumulates past +-pi where it has to).
  std::complex<double> shift(0.0, 0.0);
  while (z.real() < 1.5) {
    if (std::abs(z) == 0.0 ||
        (z.imag() == 0.0 && z.real() == std::round(z.real()) && z.real() <= 0.0))
      throw std::domain_error("log_gamma at a pole");
    shift -= std::log(z);
    z += 1.0;
  }
  std::complex<double> x = z - 1.0;
  std::complex<double> acc(kLanczos[0], 0.0);
  for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (x + static_cast<double>(k));
  std::complex<double> t = x + 7.5;
  return shift + 0.5 * std::log(2.0 * kPi) + (x + 0.5) * std::log(t) - t + std::log(acc);
}

std::complex<double> gauss_2f1(std::complex<double> a, std::complex<double> b,
                               std::complex<double> c, std::complex<double> z, double tol) {
  long stop = termination_index(a, b);
  long nc = -1;
  if (near_nonpositive_integer(c, &nc)) {
    // Safe only if the series terminates strictly before (c)_k vanishes.
    if (stop < 0 || stop > nc)
      throw std::domain_error(
          "2F1 denominator parameter is a non-positive integer; use the regularized path");
  }
  if (stop < 0 && std::abs(z) >= 1.0)
    throw std::domain_error("2F1 series requires |z| < 1 unless terminating");
  return series_2f1(a, b, c, z, tol, stop);
}

std::complex<double> gauss_2f1_regularized(std::complex<double> a, std::complex<double> b,
                                           std::complex<double> c, std::complex<double> z,
                                           double tol) {
  long nc = -1;
  if (!near_nonpositive_integer(c, &nc)) return gauss_2f1(a, b, c, z, tol) / complex_gamma(c);
  long n1 = nc + 1;  // c = -N: first surviving series index
  std::complex<double> pref = pochhammer(a, n1) * pochhammer(b, n1) / factorial(n1);
  return pref * std::pow(z, static_cast<double>(n1)) *
         gauss_2f1(a + static_cast<double>(n1), b + static_cast<double>(n1),
                   std::complex<double>(static_cast<double>(n1 + 1), 0.0), z, tol);
}

namespace {

// power with the 0^0 = 1 convention used by the trivial-angle cases
double real_pow(double base, long e) {
  if (e == 0) return 1.0;
  return std::pow(base, static_cast<double>(e));
}

// i^k exactly, k any integer
std::complex<double> i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// tan^{m-t}(theta/2) * 2F1(m-l0, -t-l0; m-t+1; -tan^2); for t > m the
// regularized fold turns the negative tangent power into tan^{t-m} times a
// Pochhammer prefactor.
std::complex<double> theta_term(const HsfParams& p, long t2 /* twice t */, double tol) {
  double x = std::tan(p.theta / 2.0);
  std::complex<double> a(0.5 * (p.m.twice - p.l0.twice), 0.0);
  std::complex<double> b(0.5 * (-t2 - p.l0.twice), 0.0);
  long pw = (p.m.twice - t2) / 2;  // m - t, an integer
  if (pw >= 0) {
    return real_pow(x, pw) *
           gauss_2f1(a, b, std::complex<double>(static_cast<double>(pw + 1), 0.0),
                     std::complex<double>(-x * x, 0.0), tol);
  }
  long n1 = -pw;  // = t - m = N + 1
  std::complex<double> pref =
      pochhammer(a, n1) * pochhammer(b, n1) / factorial(n1) * ((n1 % 2 == 0) ? 1.0 : -1.0);
  return pref * real_pow(x, n1) *
         gauss_2f1(a + static_cast<double>(n1), b + static_cast<double>(n1),
                   std::complex<double>(static_cast<double>(n1 + 1), 0.0),
                   std::complex<double>(-x * x, 0.0), tol);
}

// tanh^{t-n}(tau/2) * 2F1(t - i rho + 1/2, -n - i rho + 1/2; t-n+1; tanh^2),
// folded the same way for t < n.
std::complex<double> tau_term(const HsfParams& p, long t2, double tol) {
  double h = std::tanh(p.tau / 2.0);
  std::complex<double> a(0.5 * t2 + 0.5, -p.rho);
  std::complex<double> b(-0.5 * p.n.twice + 0.5, -p.rho);
  long pw = (t2 - p.n.twice) / 2;  // t - n
  if (pw >= 0) {
    return real_pow(h, pw) *
           gauss_2f1(a, b, std::complex<double>(static_cast<double>(pw + 1), 0.0),
                     std::complex<double>(h * h, 0.0), tol);
  }
  long n1 = -pw;
  std::complex<double> pref = pochhammer(a, n1) * pochhammer(b, n1) / factorial(n1);
  return pref * real_pow(h, n1) *
         gauss_2f1(a + static_cast<double>(n1), b + static_cast<double>(n1),
                   std::complex<double>(static_cast<double>(n1 + 1), 0.0),
                   std::complex<double>(h * h, 0.0), tol);
}

}  // namespace

namespace {

void validate_params(const HsfParams& p) {
  if (p.l0.twice < 0) throw std::domain_error("l0 must be non-negative");
  if (p.m.abs() > p.l0 || p.n.abs() > p.l0) throw std::domain_error("|m|, |n| must not exceed l0");
  if (p.m < p.n) throw std::domain_error("the formula is stated for m >= n");
  if ((p.m.twice - p.l0.twice) % 2 != 0 || (p.n.twice - p.l0.twice) % 2 != 0)
    throw std::domain_error("m, n must differ from l0 by integers");
  if (!(p.theta >= 0.0 && p.theta < kPi)) throw std::domain_error("theta must lie in [0, pi)");
  double h = std::tanh(p.tau / 2.0);
  if (!(p.tau >= 0.0) || h * h > 1.0 - 1e-6)
    throw std::domain_error("tau out of the supported range (tanh^2(tau/2) <= 1 - 1e-6)");
}

}  // namespace

std::vector<std::complex<double>> hyperspherical_terms(const HsfParams& p, double tol) {
  validate_params(p);
  std::vector<std::complex<double>> terms;
  for (long t2 = -p.l0.twice; t2 <= p.l0.twice; t2 += 2) {
    std::complex<double> phase = i_power((p.m.twice - t2) / 2);
    terms.push_back(phase * theta_term(p, t2, tol) * tau_term(p, t2, tol));
  }
  return terms;
}

std::complex<double> hyperspherical_m(const HsfParams& p, double tol) {
  validate_params(p);

  double mv = p.m.to_double(), nv = p.n.to_double(), l0v = p.l0.to_double();
  std::complex<double> i_unit(0.0, 1.0);
  std::complex<double> expo = -(mv * (p.eps_m + i_unit * p.phi) + nv * (p.eps_n + i_unit * p.psi));
  std::complex<double> prefactor = std::exp(expo);

  std::complex<double> irho(0.0, p.rho);
  std::complex<double> gamma_ratio_sqrt =
      std::exp(0.5 * (log_gamma({l0v + mv + 1.0, 0.0}) + log_gamma(irho - nv + 0.5) -
                      log_gamma({l0v - mv + 1.0, 0.0}) - log_gamma(irho + nv + 0.5)));

  std::complex<double> envelope =
      std::pow(std::cos(p.theta / 2.0), 2.0 * l0v) *
      std::exp(std::complex<double>(-1.0, 2.0 * p.rho) * std::log(std::cosh(p.tau / 2.0)));

  std::complex<double> sum(0.0, 0.0);
  for (const auto& term : hyperspherical_terms(p, tol)) sum += term;
  return prefactor * gamma_ratio_sqrt * envelope * sum;
}

}  // namespace spinspec
