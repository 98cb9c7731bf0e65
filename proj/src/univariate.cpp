#include "pvs/univariate.hpp"

#include <algorithm>

namespace pvs {

UniPoly UniPoly::interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw Error("interpolate: size mismatch");
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      const Rational den = xs[i] - xs[i - k];
      if (den.is_zero()) throw Error("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / den;
      if (i == k) break;
    }
  UniPoly result;
  for (std::size_t k = n; k-- > 0;) {
    // result = result * (x - xs[k]) + dd[k]
    std::vector<Rational> c(result.c_.size() + 1);
    for (std::size_t j = 0; j < result.c_.size(); ++j) {
      c[j + 1] += result.c_[j];
      c[j] -= result.c_[j] * xs[k];
    }
    c[0] += dd[k];
    result = UniPoly(std::move(c));
  }
  return result;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  const Rational inv = Rational(1) / c_.back();
  std::vector<Rational> c = c_;
  for (auto& x : c) x *= inv;
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& remainder) {
  if (b.is_zero()) throw Error("univariate division by zero");
  std::vector<Rational> r = a.c_;
  const int db = b.degree();
  if (a.degree() < db) {
    remainder = a;
    return {};
  }
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv = Rational(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k].is_zero()) continue;
    const Rational f = r[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
  }
  remainder = UniPoly(std::move(r));
  return UniPoly(std::move(q));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r;
    divmod(a, b, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace pvs
