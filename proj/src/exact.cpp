#include "spinspec/exact.hpp"

#include <algorithm>
#include <cmath>

namespace spinspec {

namespace detail {

std::string to_string128(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

}  // namespace detail

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::domain_error("malformed rational '" + s + "'");
  }
}

void Surd::normalize() {
  if (rad_ < 0) throw std::domain_error("negative radicand");
  if (rad_ == 0 || coeff_.is_zero()) {
    coeff_ = Rational(0);
    rad_ = 1;
    return;
  }
  // Pull square factors out of the radicand.
  for (std::int64_t d = 2; d * d <= rad_; ++d) {
    while (rad_ % (d * d) == 0) {
      rad_ /= d * d;
      coeff_ *= Rational(d);
    }
  }
}

double Surd::to_double() const {
  return coeff_.to_double() * std::sqrt(static_cast<double>(rad_));
}

std::string Surd::to_string() const {
  if (rad_ == 1 || coeff_.is_zero()) return coeff_.to_string();
  std::string root = "sqrt(" + std::to_string(rad_) + ")";
  if (coeff_ == Rational(1)) return root;
  if (coeff_ == Rational(-1)) return "-" + root;
  return coeff_.to_string() + "*" + root;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return RationalPolynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RationalPolynomial(std::move(c));
}

std::pair<RationalPolynomial, Rational> RationalPolynomial::divide_linear(const Rational& r) const {
  if (is_zero()) return {RationalPolynomial(), Rational(0)};
  std::vector<Rational> q(c_.size() - 1);
  Rational carry(0);
  for (int k = degree(); k >= 1; --k) {
    carry = c_[static_cast<std::size_t>(k)] + carry * r;
    q[static_cast<std::size_t>(k - 1)] = carry;
  }
  Rational rem = c_[0] + carry * r;
  return {RationalPolynomial(std::move(q)), rem};
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    Rational a = coeff(k);
    if (a.is_zero()) continue;
    bool neg = a.sign() < 0;
    Rational mag = a.abs();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = (mag == Rational(1)) && k > 0;
    if (!unit) out += mag.to_string();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

GridRoots poly_halfint_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("root extraction from the zero polynomial");
  GridRoots out;
  out.remainder = p;
  if (p.degree() == 0) return out;

  // Root magnitude bound: min of Cauchy (1 + max |a_k/a_n|) and Fujiwara
  // (2 max_k |a_{n-k}/a_n|^{1/k}), evaluated in floating point with headroom.
  int n = p.degree();
  double lead = std::abs(p.coeff(n).to_double());
  double cauchy = 0.0, fujiwara = 0.0;
  for (int k = 1; k <= n; ++k) {
    double q = std::abs(p.coeff(n - k).to_double()) / lead;
    cauchy = std::max(cauchy, q);
    fujiwara = std::max(fujiwara, std::pow(q, 1.0 / k));
  }
  double bound = std::min(1.0 + cauchy, 2.0 * fujiwara) * (1.0 + 1e-9);
  std::int64_t tmax = static_cast<std::int64_t>(std::ceil(2.0 * bound)) + 1;

  for (std::int64_t tw = -tmax; tw <= tmax; ++tw) {
    Rational r(tw, 2);
    int mult = 0;
    while (!out.remainder.is_zero() && out.remainder.degree() >= 1 &&
           out.remainder.eval(r).is_zero()) {
      auto [q, rem] = out.remainder.divide_linear(r);
      (void)rem;  // exact zero by the eval check
      out.remainder = q;
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(HalfInt::from_twice(tw), mult);
  }
  return out;
}

}  // namespace spinspec
