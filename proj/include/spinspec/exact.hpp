#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spinspec {

using int128 = __int128;

/// Thrown when a value leaves the exactly representable integer range.
struct overflow_error : std::runtime_error {
  explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("int64 add overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("int64 mul overflow");
  return r;
}

inline int128 checked_add128(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("int128 add overflow");
  return r;
}

inline int128 checked_mul128(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("int128 mul overflow");
  return r;
}

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

inline int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string128(int128 v);

}  // namespace detail

/// Reduced fraction num/den with den > 0. Arithmetic is exact; intermediates
/// run in 128-bit integers and overflow is loud.
class Rational {
 public:
  Rational() = default;
  Rational(int128 n) : num_(n) {}  // NOLINT: implicit by design
  Rational(int128 n, int128 d) : num_(n), den_(d) { reduce(); }

  int128 num() const { return num_; }
  int128 den() const { return den_; }
  std::string num_str() const { return detail::to_string128(num_); }
  std::string den_str() const { return detail::to_string128(den_); }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    int128 g = detail::gcd128(a.den_, b.den_);
    int128 n = detail::checked_add128(detail::checked_mul128(a.num_, b.den_ / g),
                                      detail::checked_mul128(b.num_, a.den_ / g));
    return Rational(n, detail::checked_mul128(a.den_ / g, b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    int128 g1 = detail::gcd128(a.num_, b.den_);
    int128 g2 = detail::gcd128(b.num_, a.den_);
    return Rational(detail::checked_mul128(a.num_ / g1, b.num_ / g2),
                    detail::checked_mul128(a.den_ / g2, b.den_ / g1), already_reduced{});
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero rational");
    return a * Rational(b.den_, b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return detail::checked_mul128(a.num_, b.den_) < detail::checked_mul128(b.num_, a.den_);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const {
    if (den_ == 1) return num_str();
    return num_str() + "/" + den_str();
  }

  /// Parses "p" or "p/q".
  static Rational parse(const std::string& s);

 private:
  struct already_reduced {};
  Rational(int128 n, int128 d, already_reduced) : num_(n), den_(d) {}

  void reduce() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    int128 g = detail::gcd128(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  int128 num_ = 0;
  int128 den_ = 1;
};

/// Spin label stored as twice its value, so all label arithmetic stays in
/// integers. 29/2 is {twice = 29}.
struct HalfInt {
  std::int64_t twice = 0;

  HalfInt() = default;
  explicit constexpr HalfInt(std::int64_t tw) : twice(tw) {}
  static constexpr HalfInt from_twice(std::int64_t tw) { return HalfInt(tw); }
  static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }

  bool is_integer() const { return twice % 2 == 0; }
  Rational to_rational() const { return Rational(twice, 2); }
  double to_double() const { return static_cast<double>(twice) / 2.0; }
  std::string to_string() const { return to_rational().to_string(); }

  friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(detail::checked_add(a.twice, b.twice)); }
  friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(detail::checked_add(a.twice, -b.twice)); }
  HalfInt operator-() const { return HalfInt(-twice); }

  friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
  friend bool operator!=(HalfInt a, HalfInt b) { return a.twice != b.twice; }
  friend bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }
  friend bool operator>(HalfInt a, HalfInt b) { return a.twice > b.twice; }
  friend bool operator<=(HalfInt a, HalfInt b) { return a.twice <= b.twice; }
  friend bool operator>=(HalfInt a, HalfInt b) { return a.twice >= b.twice; }

  HalfInt abs() const { return HalfInt(std::abs(twice)); }
};

/// Exact product of two half-integers; lands on the quarter grid in general.
inline Rational operator*(HalfInt a, HalfInt b) {
  return Rational(detail::checked_mul(a.twice, b.twice), 4);
}

/// coeff * sqrt(radicand) with the radicand kept squarefree. Addition is
/// defined only within one radicand class; mixing radicands throws.
class Surd {
 public:
  Surd() = default;
  Surd(const Rational& q) : coeff_(q) {}  // NOLINT: implicit by design
  Surd(const Rational& coeff, std::int64_t radicand) : coeff_(coeff), rad_(radicand) {
    normalize();
  }
  static Surd sqrt_of(std::int64_t n) { return Surd(Rational(1), n); }

  const Rational& coeff() const { return coeff_; }
  std::int64_t radicand() const { return rad_; }

  bool is_zero() const { return coeff_.is_zero(); }
  bool is_rational() const { return rad_ == 1; }

  Rational as_rational() const {
    if (!is_rational()) throw std::domain_error("surd " + to_string() + " is irrational");
    return coeff_;
  }

  /// Exact value of the square, always rational.
  Rational squared() const { return coeff_ * coeff_ * Rational(rad_); }

  Surd operator-() const { return Surd(-coeff_, rad_, no_normalize{}); }

  friend Surd operator*(const Surd& a, const Surd& b) {
    // a.rad_ and b.rad_ are squarefree, so rad = g^2 * (a/g) * (b/g) with the
    // cofactors coprime; the product of coprime squarefree numbers is squarefree.
    std::int64_t g = std::gcd(a.rad_, b.rad_);
    Rational c = a.coeff_ * b.coeff_ * Rational(g);
    std::int64_t rad = detail::checked_mul(a.rad_ / g, b.rad_ / g);
    if (c.is_zero()) rad = 1;
    return Surd(c, rad, no_normalize{});
  }

  friend Surd operator+(const Surd& a, const Surd& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.rad_ != b.rad_)
      throw std::domain_error("surd addition across radicands " + std::to_string(a.rad_) +
                              " and " + std::to_string(b.rad_));
    Rational c = a.coeff_ + b.coeff_;
    return Surd(c, c.is_zero() ? 1 : a.rad_, no_normalize{});
  }
  friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }

  Surd& operator+=(const Surd& o) { return *this = *this + o; }
  Surd& operator*=(const Surd& o) { return *this = *this * o; }

  friend bool operator==(const Surd& a, const Surd& b) {
    return a.coeff_ == b.coeff_ && a.rad_ == b.rad_;
  }
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

  double to_double() const;
  std::string to_string() const;

 private:
  struct no_normalize {};
  Surd(const Rational& c, std::int64_t r, no_normalize) : coeff_(c), rad_(r) {}

  void normalize();

  Rational coeff_;
  std::int64_t rad_ = 1;
};

/// A surd, optionally times i. Covers every matrix entry in this library:
/// each operator matrix is uniformly real or uniformly imaginary, so a
/// genuinely mixed complex entry never has to be represented.
class GaussSurd {
 public:
  GaussSurd() = default;
  GaussSurd(const Surd& s) : s_(s) {}  // NOLINT: implicit by design
  GaussSurd(const Rational& q) : s_(q) {}  // NOLINT: implicit by design
  GaussSurd(const Surd& s, bool imaginary) : s_(s), imag_(imaginary) { canonicalize(); }
  static GaussSurd i_times(const Surd& s) { return GaussSurd(s, true); }

  const Surd& magnitude_part() const { return s_; }
  bool is_imaginary() const { return imag_; }
  bool is_zero() const { return s_.is_zero(); }
  bool is_real() const { return !imag_; }

  GaussSurd conj() const { return imag_ ? GaussSurd(-s_, true) : *this; }
  GaussSurd operator-() const { return GaussSurd(-s_, imag_); }

  /// |entry|^2, always rational.
  Rational abs_squared() const { return s_.squared(); }

  friend GaussSurd operator*(const GaussSurd& a, const GaussSurd& b) {
    Surd p = a.s_ * b.s_;
    if (a.imag_ && b.imag_) return GaussSurd(-p, false);
    return GaussSurd(p, a.imag_ || b.imag_);
  }

  friend GaussSurd operator+(const GaussSurd& a, const GaussSurd& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.imag_ != b.imag_)
      throw std::domain_error("sum of real and imaginary surd entries is not representable");
    return GaussSurd(a.s_ + b.s_, a.imag_);
  }
  friend GaussSurd operator-(const GaussSurd& a, const GaussSurd& b) { return a + (-b); }

  GaussSurd& operator+=(const GaussSurd& o) { return *this = *this + o; }

  friend bool operator==(const GaussSurd& a, const GaussSurd& b) {
    return a.s_ == b.s_ && a.imag_ == b.imag_;
  }
  friend bool operator!=(const GaussSurd& a, const GaussSurd& b) { return !(a == b); }

  double real_part() const { return imag_ ? 0.0 : s_.to_double(); }
  double imag_part() const { return imag_ ? s_.to_double() : 0.0; }
  std::string to_string() const { return imag_ ? "i*" + s_.to_string() : s_.to_string(); }

 private:
  void canonicalize() {
    if (s_.is_zero()) imag_ = false;
  }

  Surd s_;
  bool imag_ = false;
};

/// Dense polynomial over Q, coefficients ascending by degree. The zero
/// polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RationalPolynomial constant(const Rational& q) {
    return RationalPolynomial(std::vector<Rational>{q});
  }
  /// x - r
  static RationalPolynomial linear_root(const Rational& r) {
    return RationalPolynomial({-r, Rational(1)});
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) {
    return !(a == b);
  }

  /// Exact synthetic division by (x - r). Returns {quotient, remainder}.
  std::pair<RationalPolynomial, Rational> divide_linear(const Rational& r) const;

  /// Rendered as e.g. "x^4 - 5/4*x^2 + 9/16".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

struct GridRoots {
  std::vector<std::pair<HalfInt, int>> roots;  // (root, multiplicity), ascending
  RationalPolynomial remainder;                // factor with no half-integer roots
};

/// Extracts every root of p on the half-integer grid, with exact
/// multiplicities via repeated synthetic division. Whatever does not divide
/// out lands in the remainder factor.
GridRoots poly_halfint_roots(const RationalPolynomial& p);

}  // namespace spinspec
