#pragma once

// Dense exact matrices, polynomial matrices, determinants and linear substitution.

#include "pvs/multipoly.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace pvs {

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

template <ExactField K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  Matrix(std::initializer_list<std::initializer_list<K>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("ragged matrix literal");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Matrix diagonal(const std::vector<K>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }
  /// Embeds a rational matrix into any field.
  template <ExactField L>
  static Matrix from(const Matrix<L>& o) {
    Matrix m(o.rows(), o.cols());
    for (int i = 0; i < o.rows(); ++i)
      for (int j = 0; j < o.cols(); ++j) m(i, j) = K(o(i, j));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  K& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<K> column(int j) const {
    std::vector<K> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix conj() const {
    Matrix c = *this;
    for (auto& x : c.a_) x = pvs::conj(x);
    return c;
  }
  K trace() const {
    K t(0);
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }
  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const K& x) { return pvs::is_zero(x); });
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    same_shape(a, b);
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    same_shape(a, b);
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] -= b.a_[k];
    return a;
  }
  friend Matrix operator*(const K& c, Matrix a) {
    for (auto& x : a.a_) x *= c;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const K& x = a(i, k);
        if (pvs::is_zero(x)) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
      }
    return r;
  }
  friend std::vector<K> operator*(const Matrix& a, const std::vector<K>& v) {
    if (a.cols_ != static_cast<int>(v.size())) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<K> r(a.rows_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) r[i] += a(i, k) * v[k];
    return r;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Gaussian elimination over the field.
  K det() const {
    if (!square()) throw DimensionMismatch("determinant of a non-square matrix");
    Matrix m = *this;
    K d(1);
    for (int c = 0; c < rows_; ++c) {
      int p = c;
      while (p < rows_ && pvs::is_zero(m(p, c))) ++p;
      if (p == rows_) return K(0);
      if (p != c) {
        m.swap_rows(p, c);
        d = -d;
      }
      d *= m(c, c);
      const K inv = K(1) / m(c, c);
      for (int r = c + 1; r < rows_; ++r) {
        if (pvs::is_zero(m(r, c))) continue;
        const K f = m(r, c) * inv;
        for (int j = c; j < cols_; ++j) m(r, j) -= f * m(c, j);
      }
    }
    return d;
  }

  /// Throws SingularMatrix when not invertible.
  Matrix inverse() const {
    if (!square()) throw DimensionMismatch("inverse of a non-square matrix");
    const int n = rows_;
    Matrix m = *this, inv = identity(n);
    for (int c = 0; c < n; ++c) {
      int p = c;
      while (p < n && pvs::is_zero(m(p, c))) ++p;
      if (p == n) throw SingularMatrix("matrix is singular");
      m.swap_rows(p, c);
      inv.swap_rows(p, c);
      const K s = K(1) / m(c, c);
      for (int j = 0; j < n; ++j) {
        m(c, j) *= s;
        inv(c, j) *= s;
      }
      for (int r = 0; r < n; ++r) {
        if (r == c || pvs::is_zero(m(r, c))) continue;
        const K f = m(r, c);
        for (int j = 0; j < n; ++j) {
          m(r, j) -= f * m(c, j);
          inv(r, j) -= f * inv(c, j);
        }
      }
    }
    return inv;
  }

  /// Solves A x = b; returns nullopt when A is singular.
  std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
    try {
      return inverse() * b;
    } catch (const SingularMatrix&) {
      return std::nullopt;
    }
  }

 private:
  static void same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix shape mismatch");
  }
  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<K> a_;
};

using QMatrix = Matrix<Rational>;
using CMatrix = Matrix<GaussianRational>;

/// Real part check and projection for Q(i) matrices.
inline bool is_real(const CMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_real()) return false;
  return true;
}
inline QMatrix real_part(const CMatrix& m) {
  QMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).re();
  return r;
}

template <ExactField K>
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int n, int arity) : n_(n), arity_(arity), a_(static_cast<std::size_t>(n) * n, MultiPoly<K>(arity)) {}

  int n() const { return n_; }
  int arity() const { return arity_; }
  MultiPoly<K>& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const MultiPoly<K>& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  /// Lifts a constant matrix.
  static PolyMatrix constant(const Matrix<K>& m, int arity) {
    if (!m.square()) throw DimensionMismatch("PolyMatrix must be square");
    PolyMatrix p(m.rows(), arity);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) p(i, j) = MultiPoly<K>::constant(arity, m(i, j));
    return p;
  }

  Matrix<K> eval(const std::vector<K>& point) const {
    Matrix<K> m(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).eval(point);
    return m;
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  int n_ = 0;
  int arity_ = 0;
  std::vector<MultiPoly<K>> a_;
};

/// Exact determinant by dynamic programming over column subsets:
/// D[S] is the minor on the first |S| rows and the columns in S.
template <ExactField K>
MultiPoly<K> poly_det(const PolyMatrix<K>& m) {
  const int n = m.n();
  if (n > 20) throw DimensionMismatch("poly_det supports n <= 20");
  if (n == 0) return MultiPoly<K>::constant(m.arity(), K(1));
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<MultiPoly<K>> minor(full + 1, MultiPoly<K>(m.arity()));
  minor[0] = MultiPoly<K>::constant(m.arity(), K(1));
  std::vector<std::vector<std::size_t>> by_size(n + 1);
  for (std::size_t s = 1; s <= full; ++s) by_size[static_cast<std::size_t>(__builtin_popcountll(s))].push_back(s);
  for (int r = 1; r <= n; ++r) {
    for (std::size_t s : by_size[r]) {
      MultiPoly<K> acc(m.arity());
      int pos = 0;
      for (int c = 0; c < n; ++c) {
        if (!(s >> c & 1)) continue;
        const auto& entry = m(r - 1, c);
        const auto& sub = minor[s & ~(std::size_t{1} << c)];
        if (!entry.is_zero() && !sub.is_zero()) {
          // Expansion along row r-1 of the |S|x|S| minor; c sits at position pos.
          if ((r - 1 + pos) % 2) acc -= entry * sub;
          else acc += entry * sub;
        }
        ++pos;
      }
      minor[s] = std::move(acc);
    }
    // Minors of size r-1 are no longer needed.
    for (std::size_t s : by_size[r - 1]) minor[s] = MultiPoly<K>(m.arity());
  }
  return minor[full];
}

/// v -> p(A v), expanded exactly.
template <ExactField K>
MultiPoly<K> linear_substitute(const MultiPoly<K>& p, const Matrix<K>& a) {
  const int n = p.arity();
  if (!a.square() || a.rows() != n) throw DimensionMismatch("linear_substitute: matrix must be arity x arity");
  // image[j] = (A v)_j as a linear form.
  std::vector<MultiPoly<K>> image;
  image.reserve(n);
  for (int j = 0; j < n; ++j) {
    std::vector<K> row(n);
    for (int k = 0; k < n; ++k) row[k] = a(j, k);
    image.push_back(MultiPoly<K>::linear(row));
  }
  std::unordered_map<Monomial, MultiPoly<K>, MonomialHash> memo;
  memo.emplace(Monomial{}, MultiPoly<K>::constant(n, K(1)));
  std::function<const MultiPoly<K>&(const Monomial&)> monomial_image = [&](const Monomial& m) -> const MultiPoly<K>& {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    int j = 0;
    while (m.e[j] == 0) ++j;
    Monomial lower = m;
    --lower.e[j];
    MultiPoly<K> img = monomial_image(lower) * image[j];
    return memo.emplace(m, std::move(img)).first->second;
  };
  std::unordered_map<Monomial, K, MonomialHash> acc;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [mm, cc] : monomial_image(m).terms()) {
      K v = c * cc;
      auto [it, fresh] = acc.try_emplace(mm, v);
      if (!fresh) it->second += v;
    }
  }
  std::vector<typename MultiPoly<K>::Term> terms(acc.begin(), acc.end());
  return MultiPoly<K>::from_terms(n, std::move(terms));
}

}  // namespace pvs
