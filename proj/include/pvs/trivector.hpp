#pragma once

// Trivectors in the third exterior power of an 8-dimensional space W, the
// GL(1) x GL(8) action, the map D3 and the symmetric matrix of linear forms S_x.

#include "pvs/codec.hpp"
#include "pvs/matrix.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace pvs {

inline constexpr int kDim = 8;

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidGroupElement : public Error {
 public:
  using Error::Error;
};

/// Strictly increasing 1-based index triple.
using Triple = std::array<int, 3>;

/// Sign of the permutation sorting `idx`, or 0 when an index repeats.
template <std::size_t N>
int permutation_sign(const std::array<int, N>& idx) {
  int s = 1;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      if (idx[a] == idx[b]) return 0;
      if (idx[a] > idx[b]) s = -s;
    }
  return s;
}

/// e_i ^ e_j ^ e_k scaled by c, as a sorted triple with the sign folded into
/// the coefficient; nullopt when an index repeats.
template <ExactField K>
std::optional<std::pair<Triple, K>> wedge_canonicalize(int i, int j, int k, const K& c) {
  for (int x : {i, j, k})
    if (x < 1 || x > kDim) throw IndexOutOfRange("wedge index " + std::to_string(x) + " outside 1..8");
  const int s = permutation_sign(std::array<int, 3>{i, j, k});
  if (s == 0) return std::nullopt;
  Triple t{i, j, k};
  std::sort(t.begin(), t.end());
  return std::make_pair(t, s > 0 ? c : -c);
}

template <ExactField K>
class Trivector {
 public:
  Trivector() = default;

  /// Adds c * e_i ^ e_j ^ e_k, in any index order.
  Trivector& add(int i, int j, int k, const K& c) {
    auto term = wedge_canonicalize(i, j, k, c);
    if (!term) return *this;
    auto [it, fresh] = terms_.try_emplace(term->first, term->second);
    if (!fresh) it->second += term->second;
    if (pvs::is_zero(it->second)) terms_.erase(it);
    return *this;
  }

  const std::map<Triple, K>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  K coefficient(int i, int j, int k) const {
    auto term = wedge_canonicalize(i, j, k, K(1));
    if (!term) return K(0);
    auto it = terms_.find(term->first);
    return it == terms_.end() ? K(0) : (term->second == K(1) ? it->second : -it->second);
  }

  template <ExactField L>
  static Trivector from(const Trivector<L>& o) {
    Trivector r;
    for (const auto& [t, c] : o.terms()) r.terms_.emplace(t, K(c));
    return r;
  }

  friend Trivector operator+(Trivector a, const Trivector& b) {
    for (const auto& [t, c] : b.terms_) a.add(t[0], t[1], t[2], c);
    return a;
  }
  friend Trivector operator-(Trivector a, const Trivector& b) {
    for (const auto& [t, c] : b.terms_) a.add(t[0], t[1], t[2], -c);
    return a;
  }
  friend Trivector operator*(const K& s, Trivector a) {
    if (pvs::is_zero(s)) return {};
    for (auto& [t, c] : a.terms_) c *= s;
    return a;
  }
  friend bool operator==(const Trivector&, const Trivector&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + to_string(c) + ")e" + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
    }
    return out;
  }

 private:
  std::map<Triple, K> terms_;
};

using QTrivector = Trivector<Rational>;

/// (t, g) in GL(1) x GL(8).
template <ExactField K>
struct GroupElement {
  K t;
  Matrix<K> g;

  GroupElement(K t_, Matrix<K> g_) : t(std::move(t_)), g(std::move(g_)) {
    if (pvs::is_zero(t)) throw InvalidGroupElement("t must be nonzero");
    if (g.rows() != kDim || g.cols() != kDim) throw InvalidGroupElement("g must be 8x8");
    if (pvs::is_zero(g.det())) throw InvalidGroupElement("g must be invertible");
  }
  static GroupElement identity() { return {K(1), Matrix<K>::identity(kDim)}; }

  K det() const { return g.det(); }
  GroupElement inverse() const { return {K(1) / t, g.inverse()}; }
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) { return {a.t * b.t, a.g * b.g}; }

  template <ExactField L>
  static GroupElement from(const GroupElement<L>& o) {
    return {K(o.t), Matrix<K>::from(o.g)};
  }
};

/// t * (g e_a ^ g e_b ^ g e_c), extended linearly.
template <ExactField K>
Trivector<K> act(const GroupElement<K>& el, const Trivector<K>& x) {
  Trivector<K> r;
  const auto& g = el.g;
  for (const auto& [abc, c] : x.terms()) {
    const K tc = el.t * c;
    for (int i = 1; i <= kDim; ++i)
      for (int j = i + 1; j <= kDim; ++j)
        for (int k = j + 1; k <= kDim; ++k) {
          // 3x3 minor of g on rows (i,j,k), columns (a,b,c).
          auto m = [&](int r, int col) -> const K& { return g(r - 1, abc[col] - 1); };
          K minor = m(i, 0) * (m(j, 1) * m(k, 2) - m(j, 2) * m(k, 1)) -
                    m(i, 1) * (m(j, 0) * m(k, 2) - m(j, 2) * m(k, 0)) +
                    m(i, 2) * (m(j, 0) * m(k, 1) - m(j, 1) * m(k, 0));
          if (!pvs::is_zero(minor)) r.add(i, j, k, tc * minor);
        }
  }
  return r;
}

/// Element of (second exterior power of W) tensor W: keys ((i<j), k).
template <ExactField K>
class TensorD3 {
 public:
  using Key = std::pair<std::array<int, 2>, int>;

  void add(int i, int j, int k, const K& c) {
    if (i == j || pvs::is_zero(c)) return;
    K v = i < j ? c : -c;
    const Key key{{std::min(i, j), std::max(i, j)}, k};
    auto [it, fresh] = terms_.try_emplace(key, v);
    if (!fresh) it->second += v;
    if (pvs::is_zero(it->second)) terms_.erase(it);
  }
  const std::map<Key, K>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  friend bool operator==(const TensorD3&, const TensorD3&) = default;

 private:
  std::map<Key, K> terms_;
};

/// D3(a^b^c) = b^c (x) a - a^c (x) b + a^b (x) c.
template <ExactField K>
TensorD3<K> d3(const Trivector<K>& x) {
  TensorD3<K> r;
  for (const auto& [t, c] : x.terms()) {
    r.add(t[1], t[2], t[0], c);
    r.add(t[0], t[2], t[1], -c);
    r.add(t[0], t[1], t[2], c);
  }
  return r;
}

/// 8x8 matrix whose entries are covectors over the dual basis f1..f8.
template <ExactField K>
class SMatrix {
 public:
  using Covector = std::array<K, kDim>;

  Covector& operator()(int i, int j) { return a_[i][j]; }
  const Covector& operator()(int i, int j) const { return a_[i][j]; }

  bool is_symmetric() const {
    for (int i = 0; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j)
        if (a_[i][j] != a_[j][i]) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& row : a_)
      for (const auto& cv : row)
        for (const auto& c : cv)
          if (!pvs::is_zero(c)) return false;
    return true;
  }

  /// Entries as linear forms in v1..v8 (f_k evaluated at v is v_k).
  PolyMatrix<K> to_poly_matrix() const {
    PolyMatrix<K> m(kDim, kDim);
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) m(i, j) = MultiPoly<K>::linear(std::vector<K>(a_[i][j].begin(), a_[i][j].end()));
    return m;
  }

  /// Entry as text, e.g. "3f6" or "2f8 - 2f7".
  static std::string covector_str(const Covector& cv);

  friend bool operator==(const SMatrix&, const SMatrix&) = default;

 private:
  std::array<std::array<Covector, kDim>, kDim> a_{};
};

/// Sign attached to the 7-form omitting e_k under the identification with f_k.
inline int seven_form_sign(int k) { return (k % 2 == 1) ? 1 : -1; }  // (-1)^(k-1)

/// Entry (i,j) collects the coefficient of slot-i (x) slot-j in x ^ D3(x) ^ D3(x).
template <ExactField K>
SMatrix<K> s_matrix(const Trivector<K>& x) {
  SMatrix<K> s;
  const TensorD3<K> d = d3(x);
  struct Slot {
    int a, b, slot;
    unsigned mask;
    K c;
  };
  std::vector<Slot> slots;
  for (const auto& [key, c] : d.terms())
    slots.push_back({key.first[0], key.first[1], key.second, (1u << key.first[0]) | (1u << key.first[1]), c});
  for (const auto& [t, c] : x.terms()) {
    const unsigned tm = (1u << t[0]) | (1u << t[1]) | (1u << t[2]);
    for (const auto& p1 : slots) {
      if (tm & p1.mask) continue;
      const K c1 = c * p1.c;
      for (const auto& p2 : slots) {
        if ((tm | p1.mask) & p2.mask) continue;
        const std::array<int, 7> idx{t[0], t[1], t[2], p1.a, p1.b, p2.a, p2.b};
        const unsigned all = tm | p1.mask | p2.mask;
        int k = 1;
        while (all & (1u << k)) ++k;
        const int sign = permutation_sign(idx) * seven_form_sign(k);
        K v = c1 * p2.c;
        if (sign < 0) v = -v;
        s(p1.slot - 1, p2.slot - 1)[k - 1] += v;
      }
    }
  }
  return s;
}

/// P_x(v) = det S_x(v).
template <ExactField K>
MultiPoly<K> p_poly(const Trivector<K>& x) {
  return poly_det(s_matrix(x).to_poly_matrix());
}

/// Right-hand side of the S covariance law: t^3 det(g) g S(g^-1 v) g^T.
template <ExactField K>
PolyMatrix<K> transported_s(const GroupElement<K>& el, const SMatrix<K>& s) {
  const PolyMatrix<K> base = s.to_poly_matrix();
  const Matrix<K> ginv = el.g.inverse();
  PolyMatrix<K> sub(kDim, kDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) sub(i, j) = linear_substitute(base(i, j), ginv);
  const K scale = el.t * el.t * el.t * el.g.det();
  PolyMatrix<K> out(kDim, kDim);
  for (int i = 0; i < kDim; ++i)
    for (int l = 0; l < kDim; ++l) {
      MultiPoly<K> acc(kDim);
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k) {
          const K c = el.g(i, j) * el.g(l, k);
          if (!pvs::is_zero(c) && !sub(j, k).is_zero()) acc += sub(j, k) * c;
        }
      out(i, l) = acc * scale;
    }
  return out;
}

template <ExactField K>
std::string SMatrix<K>::covector_str(const Covector& cv) {
  std::string out;
  for (int k = 0; k < kDim; ++k) {
    if (pvs::is_zero(cv[k])) continue;
    std::string c = to_string(cv[k]);
    const bool neg = c[0] == '-';
    if (neg) c.erase(0, 1);
    if (c == "1") c.clear();
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += c + "f" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

// Named constants.
QTrivector builtin_w();
QTrivector builtin_wprime();
/// The rational points over the two real forms (literal values).
QTrivector builtin_w1();
QTrivector builtin_w2();
/// tau: swaps the first two coordinate triples and negates e7, e8; fixes w.
GroupElement<Rational> builtin_tau();

/// Looks up "w", "wprime", "w1", "w2"; throws Error for other names.
QTrivector builtin_trivector(const std::string& name);

// JSON: {"terms": [{"ijk": [i,j,k], "c": "p/q"}]} and {"t": "p/q", "g": [[...]]}.
template <ExactField K>
json to_json(const Trivector<K>& x, const char* key = "ijk") {
  json terms = json::array();
  for (const auto& [t, c] : x.terms()) terms.push_back(json{{key, {t[0], t[1], t[2]}}, {"c", to_json(c)}});
  return json{{"terms", std::move(terms)}};
}

template <ExactField K>
Trivector<K> trivector_from_json(const json& j, const char* key = "ijk") {
  try {
    Trivector<K> x;
    for (const auto& term : j.at("terms")) {
      const auto& ijk = term.at(key);
      if (!ijk.is_array() || ijk.size() != 3) throw ParseError("trivector index must be a triple");
      x.add(ijk[0].get<int>(), ijk[1].get<int>(), ijk[2].get<int>(), scalar_from_json<K>(term.at("c")));
    }
    return x;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("trivector JSON: ") + ex.what());
  }
}

template <ExactField K>
json to_json(const GroupElement<K>& el) {
  return json{{"t", to_json(el.t)}, {"g", to_json(el.g)}};
}

template <ExactField K>
GroupElement<K> group_element_from_json(const json& j) {
  try {
    return {scalar_from_json<K>(j.at("t")), matrix_from_json<K>(j.at("g"))};
  } catch (const json::exception& ex) {
    throw ParseError(std::string("group element JSON: ") + ex.what());
  }
}

template <ExactField K>
json to_json(const SMatrix<K>& s) {
  json rows = json::array();
  for (int i = 0; i < kDim; ++i) {
    json row = json::array();
    for (int j = 0; j < kDim; ++j) {
      json cv = json::array();
      for (const auto& c : s(i, j)) cv.push_back(to_json(c));
      row.push_back(std::move(cv));
    }
    rows.push_back(std::move(row));
  }
  return json{{"entries", std::move(rows)}};
}

}  // namespace pvs
