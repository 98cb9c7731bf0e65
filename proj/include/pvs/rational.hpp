#pragma once

// Exact scalars: arbitrary-precision rationals and Gaussian rationals Q(i).

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pvs {

/// Base class for every error this library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view s);

  /// Canonical "p/q" form; integers print without a denominator.
  std::string str() const;

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, int exponent);
Rational abs(const Rational& r);

/// Exact square root when r is the square of a rational; returns false otherwise.
bool rational_sqrt(const Rational& r, Rational& root);

class GaussianRational {
 public:
  GaussianRational() = default;
  template <std::integral I>
  GaussianRational(I n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  std::string str() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

 private:
  Rational re_;
  Rational im_;
};

// Uniform field vocabulary used by the templated containers.
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline Rational conj(const Rational& r) { return r; }
inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const GaussianRational& z) { return z.str(); }

GaussianRational pow(const GaussianRational& base, int exponent);

/// Exact square root in Q(i); the root with positive real part (or positive
/// imaginary part when the real part is zero) is returned.
bool gaussian_sqrt(const GaussianRational& z, GaussianRational& root);

/// Sign used for normalization: positive leading coefficient over Q,
/// positive real part (then imaginary part) over Q(i).
inline bool is_positive_normal(const Rational& r) { return r.sign() > 0; }
inline bool is_positive_normal(const GaussianRational& z) {
  return z.re().sign() > 0 || (z.re().is_zero() && z.im().sign() > 0);
}

template <class K>
concept ExactField = std::same_as<K, Rational> || std::same_as<K, GaussianRational>;

/// Projects a Gaussian rational onto Q; throws when the imaginary part is nonzero.
Rational require_real(const GaussianRational& z);

}  // namespace pvs

template <>
struct std::hash<pvs::Rational> {
  std::size_t operator()(const pvs::Rational& r) const noexcept;
};
