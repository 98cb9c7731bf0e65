#pragma once

// Dense univariate polynomials over Q: just enough for gcd-based square-free splitting.

#include "pvs/rational.hpp"

#include <vector>

namespace pvs {

class UniPoly {
 public:
  UniPoly() = default;
  /// Coefficients in ascending degree order.
  explicit UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  /// Interpolates the unique polynomial of degree < xs.size() through (xs, ys).
  static UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Euclidean division; returns the quotient and stores the remainder.
  static UniPoly divmod(const UniPoly& a, const UniPoly& b, UniPoly& remainder);
  /// Monic greatest common divisor; gcd(0, 0) = 0.
  static UniPoly gcd(UniPoly a, UniPoly b);

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace pvs
