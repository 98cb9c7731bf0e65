#pragma once

// Sparse multivariate polynomials over Q or Q(i) with up to 16 variables.
// Terms are kept in graded-lex order, v1 > v2 > ... > vn, leading term first.

#include "pvs/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pvs {

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class NotAPerfectSquare : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

inline constexpr int kMaxArity = 16;

struct Monomial {
  std::array<std::uint8_t, kMaxArity> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxArity; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxArity; ++i) {
      const int s = a.e[i] + b.e[i];
      if (s > 255) throw Error("monomial exponent overflow");
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    return r;
  }
  /// Assumes b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxArity; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    return r;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lex: higher total degree first, then lexicographic on (e1, e2, ...).
inline bool glex_greater(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (int i = 0; i < kMaxArity; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

struct GlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return glex_greater(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t lo, hi;
    std::memcpy(&lo, m.e.data(), 8);
    std::memcpy(&hi, m.e.data() + 8, 8);
    return static_cast<std::size_t>(lo * 0x9e3779b97f4a7c15ULL ^ (hi + 0x7f4a7c159e3779b9ULL + (lo << 6)));
  }
};

template <ExactField K>
class MultiPoly {
 public:
  using Term = std::pair<Monomial, K>;

  MultiPoly() = default;
  explicit MultiPoly(int arity) : arity_(check_arity(arity)) {}

  static MultiPoly constant(int arity, const K& c) {
    MultiPoly p(arity);
    if (!pvs::is_zero(c)) p.terms_.emplace_back(Monomial{}, c);
    return p;
  }
  /// The coordinate function v_{index+1} (index is 0-based).
  static MultiPoly variable(int arity, int index, const K& c = K(1)) {
    if (index < 0 || index >= arity) throw DimensionMismatch("variable index out of range");
    MultiPoly p(arity);
    if (!pvs::is_zero(c)) {
      Monomial m;
      m.e[index] = 1;
      p.terms_.emplace_back(m, c);
    }
    return p;
  }
  /// sum_k coeffs[k] * v_{k+1}
  static MultiPoly linear(const std::vector<K>& coeffs) {
    MultiPoly p(static_cast<int>(coeffs.size()));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (pvs::is_zero(coeffs[k])) continue;
      Monomial m;
      m.e[k] = 1;
      p.terms_.emplace_back(m, coeffs[k]);
    }
    return p;  // v1 > v2 > ... so index order is already graded-lex order
  }
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static MultiPoly from_terms(int arity, std::vector<Term> terms) {
    MultiPoly p(arity);
    std::unordered_map<Monomial, K, MonomialHash> acc;
    acc.reserve(terms.size());
    for (auto& [m, c] : terms) {
      p.check_monomial(m);
      auto [it, fresh] = acc.try_emplace(m, c);
      if (!fresh) it->second += c;
    }
    p.assign_from(acc);
    return p;
  }

  int arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
  }
  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }
  bool is_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.first.degree() == d; });
  }
  K coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return glex_greater(t.first, x); });
    if (it != terms_.end() && it->first == m) return it->second;
    return K(0);
  }

  K eval(const std::vector<K>& point) const {
    if (static_cast<int>(point.size()) != arity_) throw DimensionMismatch("evaluation point has wrong length");
    std::vector<std::vector<K>> powers(arity_);
    K sum(0);
    for (const auto& [m, c] : terms_) {
      K term = c;
      for (int i = 0; i < arity_; ++i) {
        if (m.e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(K(1));
        while (static_cast<int>(pw.size()) <= m.e[i]) pw.push_back(pw.back() * point[i]);
        term *= pw[m.e[i]];
      }
      sum += term;
    }
    return sum;
  }

  template <class F>
  MultiPoly map_coefficients(F&& f) const {
    MultiPoly r(arity_);
    for (const auto& [m, c] : terms_) {
      K v = f(c);
      if (!pvs::is_zero(v)) r.terms_.emplace_back(m, std::move(v));
    }
    return r;
  }

  MultiPoly operator-() const {
    return map_coefficients([](const K& c) { return -c; });
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = merge(*this, o, false); }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = merge(*this, o, true); }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = multiply(*this, o); }
  MultiPoly& operator*=(const K& c) {
    if (pvs::is_zero(c)) terms_.clear();
    else
      for (auto& t : terms_) t.second *= c;
    return *this;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return multiply(a, b); }
  friend MultiPoly operator*(MultiPoly a, const K& c) { return a *= c; }
  friend MultiPoly operator*(const K& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Multiplies a single term into the polynomial; order is preserved.
  MultiPoly times_term(const Monomial& m, const K& c) const {
    MultiPoly r(arity_);
    if (pvs::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [mm, cc] : terms_) r.terms_.emplace_back(mm * m, cc * c);
    return r;
  }

  /// Human-readable form, e.g. "2*v1*v4^2 - 1/3*v7".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string cs = to_string(c);
      const bool complex = cs.find('i') != std::string::npos && cs.find('+') != std::string::npos;
      if (complex || (cs.find('i') != std::string::npos && cs.find('-', 1) != std::string::npos))
        cs = "(" + cs + ")";
      bool neg = !complex && cs[0] == '-';
      if (neg) cs.erase(0, 1);
      if (first) os << (neg ? "-" : "");
      else os << (neg ? " - " : " + ");
      first = false;
      const bool unit = cs == "1";
      bool wrote = false;
      if (!unit || m.degree() == 0) {
        os << cs;
        wrote = true;
      }
      for (int i = 0; i < arity_; ++i) {
        if (m.e[i] == 0) continue;
        os << (wrote ? "*" : "") << 'v' << (i + 1);
        if (m.e[i] > 1) os << '^' << static_cast<int>(m.e[i]);
        wrote = true;
      }
    }
    return os.str();
  }

  /// Internal: adopt already-sorted, zero-free terms.
  static MultiPoly from_sorted_unchecked(int arity, std::vector<Term> terms) {
    MultiPoly p(arity);
    p.terms_ = std::move(terms);
    return p;
  }

 private:
  static int check_arity(int arity) {
    if (arity < 0 || arity > kMaxArity) throw DimensionMismatch("arity must be in 0..16");
    return arity;
  }
  void check_monomial(const Monomial& m) const {
    for (int i = arity_; i < kMaxArity; ++i)
      if (m.e[i] != 0) throw DimensionMismatch("exponent beyond the polynomial's arity");
  }
  static void require_same_arity(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_) throw DimensionMismatch("polynomials of different arity");
  }

  void assign_from(std::unordered_map<Monomial, K, MonomialHash>& acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!pvs::is_zero(c)) terms_.emplace_back(m, std::move(c));
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return glex_greater(x.first, y.first); });
  }

  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    require_same_arity(a, b);
    MultiPoly r(a.arity_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && glex_greater(a.terms_[i].first, b.terms_[j].first))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || glex_greater(b.terms_[j].first, a.terms_[i].first)) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
        ++j;
      } else {
        K c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!pvs::is_zero(c)) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  static MultiPoly multiply(const MultiPoly& a, const MultiPoly& b) {
    require_same_arity(a, b);
    MultiPoly r(a.arity_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.size() == 1) return b.times_term(a.terms_[0].first, a.terms_[0].second);
    if (b.size() == 1) return a.times_term(b.terms_[0].first, b.terms_[0].second);
    std::unordered_map<Monomial, K, MonomialHash> acc;
    acc.reserve(a.size() * b.size() / 2 + 16);
    K prod;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        prod = ca;
        prod *= cb;
        auto [it, fresh] = acc.try_emplace(ma * mb, prod);
        if (!fresh) it->second += prod;
      }
    }
    r.assign_from(acc);
    return r;
  }

  int arity_ = 0;
  std::vector<Term> terms_;
};

using QPoly = MultiPoly<Rational>;
using CPoly = MultiPoly<GaussianRational>;

template <ExactField K>
MultiPoly<K> pow(const MultiPoly<K>& p, int e) {
  MultiPoly<K> r = MultiPoly<K>::constant(p.arity(), K(1));
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

namespace detail {

template <ExactField K>
using Remainder = std::map<Monomial, K, GlexGreater>;

template <ExactField K>
Remainder<K> to_remainder(const MultiPoly<K>& p) {
  Remainder<K> r;
  for (const auto& [m, c] : p.terms()) r.emplace_hint(r.end(), m, c);
  return r;
}

/// r -= c*m*q
template <ExactField K>
void subtract_scaled(Remainder<K>& r, const MultiPoly<K>& q, const Monomial& m, const K& c) {
  for (const auto& [mq, cq] : q.terms()) {
    const Monomial mm = mq * m;
    K v = cq * c;
    auto it = r.find(mm);
    if (it == r.end()) {
      r.emplace(mm, -v);
    } else {
      it->second -= v;
      if (is_zero(it->second)) r.erase(it);
    }
  }
}

}  // namespace detail

/// Returns r with p = q*r exactly; throws NotDivisible otherwise.
template <ExactField K>
MultiPoly<K> exact_divide(const MultiPoly<K>& p, const MultiPoly<K>& q) {
  if (p.arity() != q.arity()) throw DimensionMismatch("exact_divide: arity mismatch");
  if (q.is_zero()) throw NotDivisible("exact_divide: division by the zero polynomial");
  const auto& [lm, lc] = q.leading();
  auto rem = detail::to_remainder(p);
  std::vector<typename MultiPoly<K>::Term> quot;
  while (!rem.empty()) {
    const auto& [rm, rc] = *rem.begin();
    if (!lm.divides(rm)) throw NotDivisible("exact_divide: leading term not divisible");
    const Monomial tm = rm / lm;
    K tc = rc / lc;
    detail::subtract_scaled(rem, q, tm, tc);
    quot.emplace_back(tm, std::move(tc));
  }
  // Quotient terms are produced in strictly decreasing order.
  return MultiPoly<K>::from_sorted_unchecked(p.arity(), std::move(quot));
}

/// Returns s with s*s = p, leading coefficient positive (over Q(i): positive
/// real part, else positive imaginary part); throws NotAPerfectSquare.
template <ExactField K>
MultiPoly<K> poly_sqrt(const MultiPoly<K>& p) {
  if (p.is_zero()) throw NotAPerfectSquare("poly_sqrt: zero polynomial");
  const auto& [pm, pc] = p.leading();
  Monomial sm;
  for (int i = 0; i < kMaxArity; ++i) {
    if (pm.e[i] % 2) throw NotAPerfectSquare("poly_sqrt: odd exponent in leading term");
    sm.e[i] = pm.e[i] / 2;
  }
  K sc;
  bool ok;
  if constexpr (std::same_as<K, Rational>) ok = rational_sqrt(pc, sc);
  else ok = gaussian_sqrt(pc, sc);
  if (!ok) throw NotAPerfectSquare("poly_sqrt: leading coefficient is not a square");

  const int arity = p.arity();
  std::vector<typename MultiPoly<K>::Term> root{{sm, sc}};
  auto rem = detail::to_remainder(p);
  detail::subtract_scaled(rem, MultiPoly<K>::from_sorted_unchecked(arity, {{sm, sc}}), sm, sc);
  const K two_lead = K(2) * sc;
  while (!rem.empty()) {
    const auto& [rm, rc] = *rem.begin();
    if (!sm.divides(rm)) throw NotAPerfectSquare("poly_sqrt: remainder not divisible by the leading root term");
    const Monomial tm = rm / sm;
    if (!glex_greater(root.back().first, tm)) throw NotAPerfectSquare("poly_sqrt: root terms fail to decrease");
    K tc = rc / two_lead;
    // rem -= (2*s + t) * t, where s is the root so far.
    auto twice_s_plus_t = root;
    for (auto& t : twice_s_plus_t) t.second *= K(2);
    twice_s_plus_t.emplace_back(tm, tc);
    detail::subtract_scaled(rem, MultiPoly<K>::from_sorted_unchecked(arity, std::move(twice_s_plus_t)), tm, tc);
    root.emplace_back(tm, std::move(tc));
  }
  auto s = MultiPoly<K>::from_sorted_unchecked(arity, std::move(root));
  if (!is_positive_normal(s.leading().second)) s = -s;
  return s;
}

}  // namespace pvs
