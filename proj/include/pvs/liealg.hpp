#pragma once

// sl(3) in the coordinates e1..e8, ad matrices, the invariant forms B and C,
// transported brackets and the real forms su(H1), su(H2).
//
// Basis: e1 = E12, e2 = E23, e3 = -E31, e4 = -E21, e5 = -E32, e6 = E13,
//        e7 = diag(0, -1, 1), e8 = diag(1, 0, -1).

#include "pvs/invariants.hpp"

#include <utility>

namespace pvs {

class NotTraceless : public Error {
 public:
  using Error::Error;
};

class SingularTransport : public Error {
 public:
  using Error::Error;
};

template <ExactField K>
Matrix<K> coords_to_matrix(const std::vector<K>& v) {
  if (v.size() != kDim) throw DimensionMismatch("coordinate vector must have 8 entries");
  Matrix<K> x(3, 3);
  x(0, 1) = v[0];
  x(1, 2) = v[1];
  x(2, 0) = -v[2];
  x(1, 0) = -v[3];
  x(2, 1) = -v[4];
  x(0, 2) = v[5];
  x(0, 0) = v[7];
  x(1, 1) = -v[6];
  x(2, 2) = v[6] - v[7];
  return x;
}

template <ExactField K>
std::vector<K> matrix_to_coords(const Matrix<K>& x) {
  if (x.rows() != 3 || x.cols() != 3) throw DimensionMismatch("expected a 3x3 matrix");
  if (!pvs::is_zero(x.trace())) throw NotTraceless("matrix has nonzero trace");
  return {x(0, 1), x(1, 2), -x(2, 0), -x(1, 0), -x(2, 1), x(0, 2), -x(1, 1), x(0, 0)};
}

template <ExactField K>
std::vector<K> basis_vector(int i) {
  std::vector<K> e(kDim);
  e[i - 1] = K(1);
  return e;
}

/// Column j holds the coordinates of [X, e_j].
template <ExactField K>
Matrix<K> ad_matrix(const std::vector<K>& v) {
  const Matrix<K> x = coords_to_matrix(v);
  Matrix<K> a(kDim, kDim);
  for (int j = 0; j < kDim; ++j) {
    const Matrix<K> ej = coords_to_matrix(basis_vector<K>(j + 1));
    const auto c = matrix_to_coords(Matrix<K>(x * ej - ej * x));
    for (int i = 0; i < kDim; ++i) a(i, j) = c[i];
  }
  return a;
}

/// Coordinates of [v, v'].
template <ExactField K>
std::vector<K> bracket(const std::vector<K>& v, const std::vector<K>& vp) {
  const Matrix<K> x = coords_to_matrix(v), y = coords_to_matrix(vp);
  return matrix_to_coords(Matrix<K>(x * y - y * x));
}

template <ExactField K>
K killing_B(const std::vector<K>& v, const std::vector<K>& vp) {
  return (ad_matrix(v) * ad_matrix(vp)).trace();
}

/// tr(XYZ - ZYX) on ad images.
template <ExactField K>
K trilinear_C(const std::vector<K>& v, const std::vector<K>& vp, const std::vector<K>& vpp) {
  const Matrix<K> a = ad_matrix(v), b = ad_matrix(vp), c = ad_matrix(vpp);
  return (a * b * c - c * b * a).trace();
}

/// Recovers v from ad(v), using B(v, e_j) = tr(ad(v) ad(e_j)) and B = 6 Gram(Q_w).
template <ExactField K>
std::vector<K> ad_inverse(const Matrix<K>& a) {
  static const Matrix<K> killing_inverse = [] {
    Matrix<K> b(kDim, kDim);
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) b(i, j) = killing_B(basis_vector<K>(i + 1), basis_vector<K>(j + 1));
    return b.inverse();
  }();
  std::vector<K> rhs(kDim);
  for (int j = 0; j < kDim; ++j) rhs[j] = (a * ad_matrix(basis_vector<K>(j + 1))).trace();
  std::vector<K> v = killing_inverse * rhs;
  if (!(ad_matrix(v) == a)) throw Error("matrix is not in the image of ad");
  return v;
}

namespace detail {
template <ExactField K>
void require_invertible(const Matrix<K>& h) {
  if (h.rows() != kDim || h.cols() != kDim) throw DimensionMismatch("transport must be 8x8");
  if (pvs::is_zero(h.det())) throw SingularTransport("transport matrix is singular");
}
}  // namespace detail

/// l_x(v) = det(h)^2 h ad(h^-1 v) h^-1 for x = h w.
template <ExactField K>
Matrix<K> transport_l(const Matrix<K>& h, const std::vector<K>& v) {
  detail::require_invertible(h);
  const Matrix<K> hinv = h.inverse();
  const K d = h.det();
  return d * d * (h * ad_matrix(hinv * v) * hinv);
}

/// [v, v']_x = l_x^-1([l_x v, l_x v']).
template <ExactField K>
std::vector<K> transport_bracket(const Matrix<K>& h, const std::vector<K>& v, const std::vector<K>& vp) {
  detail::require_invertible(h);
  const Matrix<K> a = transport_l(h, v), b = transport_l(h, vp);
  const Matrix<K> c = a * b - b * a;
  // l_x(u) = det(h)^2 h ad(h^-1 u) h^-1, so u = h ad^-1(det(h)^-2 h^-1 c h).
  const Matrix<K> hinv = h.inverse();
  const K d = h.det();
  return h * ad_inverse(Matrix<K>((K(1) / (d * d)) * (hinv * c * h)));
}

/// m_{x,h}(v) = det(h)^-2 h v.
template <ExactField K>
std::vector<K> m_xh(const Matrix<K>& h, const std::vector<K>& v) {
  detail::require_invertible(h);
  const K d = h.det();
  std::vector<K> r = h * v;
  for (auto& c : r) c /= d * d;
  return r;
}

struct RealFormTransport {
  int i = 0;
  QMatrix d;  ///< D_i, 3x3
  QMatrix h_form;  ///< H_i, 3x3 Hermitian (real diagonal)
  QMatrix q;  ///< q_{D_i}, 8x8
  CMatrix h;  ///< h_{D_i}, 8x8
  QTrivector w_i;  ///< (1, h_{D_i}) w
};

/// i = 1: D = diag(1,-1,-1), H = diag(1,1,-1); i = 2: D = H = I3.
/// All structural identities are checked on construction.
RealFormTransport real_form(int i);

/// p_H(X) = -H conj(X)^T H^-1 == X.
bool su_check(const QMatrix& h_form, const CMatrix& x);
/// H conj(X)^T + X H == 0.
bool su_check_hermitian(const QMatrix& h_form, const CMatrix& x);
CMatrix p_h(const QMatrix& h_form, const CMatrix& x);

/// coords_to_matrix(h_{D_i}^-1 v).
CMatrix to_su(int i, const std::vector<Rational>& v);

/// Exact inertia (positive count, negative count) by symmetric LDL^T with 2x2 pivots.
std::pair<int, int> signature(const QMatrix& gram);
inline std::pair<int, int> signature(const QuadraticForm& q) { return signature(q.gram()); }

/// Transports for named points: "w" -> identity, "w1"/"w2" -> (1, h_D); nullopt otherwise.
std::optional<GroupElement<GaussianRational>> builtin_transport(const std::string& name);

std::vector<GaussianRational> to_gaussian(const std::vector<Rational>& v);

json to_json(const RealFormTransport& rf);

}  // namespace pvs
