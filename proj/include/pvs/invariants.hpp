#pragma once

// Relative invariants attached to a trivector x: the quadratic form Q_x and
// cubic form F_x with det S_x = 1458 Q_x F_x^2, the dual trivector Phi_x, and
// the semistability test.

#include "pvs/trivector.hpp"

#include <optional>

namespace pvs {

class DegenerateOrbit : public Error {
 public:
  using Error::Error;
};

class FactorizationFailed : public Error {
 public:
  using Error::Error;
};

class DegenerateForm : public Error {
 public:
  using Error::Error;
};

/// det S_x = kFactorConstant * Q_x * F_x^2, anchored at w with the forms below.
inline const Rational kFactorConstant{1458};

/// Q(v) = v^T M v; M_ij is half the coefficient of v_i v_j for i != j.
class QuadraticForm {
 public:
  QuadraticForm() : gram_(kDim, kDim) {}
  explicit QuadraticForm(QMatrix gram);
  /// Throws Error unless p is a homogeneous quadratic (or zero) in 8 variables.
  static QuadraticForm from_poly(const QPoly& p);

  const QMatrix& gram() const { return gram_; }
  QPoly to_poly() const;
  Rational operator()(const std::vector<Rational>& v) const;
  Rational discriminant() const { return gram_.det(); }
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  QMatrix gram_;
};

class CubicForm {
 public:
  CubicForm() : poly_(kDim) {}
  /// Throws Error unless p is homogeneous of degree 3 (or zero) in 8 variables.
  explicit CubicForm(QPoly p);
  const QPoly& poly() const { return poly_; }
  friend bool operator==(const CubicForm&, const CubicForm&) = default;

 private:
  QPoly poly_;
};

struct InvariantPair {
  QuadraticForm q;
  CubicForm f;
  /// True when the sign (and scale) of f is pinned by a transport from w.
  bool sign_exact = false;
  /// The polynomial that was factored: p = kFactorConstant * q * f^2.
  QPoly p;
};

/// Element of the third exterior power of the dual space, in the f_ijk basis.
struct DualTrivector {
  QTrivector coeffs;
  /// Value on (e_a, e_b, e_c).
  Rational operator()(int a, int b, int c) const { return coeffs.coefficient(a, b, c); }
  friend bool operator==(const DualTrivector&, const DualTrivector&) = default;
};

// The forms attached to w and wprime.
QPoly q_w_poly();
QPoly f_w_poly();
QPoly q_wprime_poly();
QPoly f_wprime_poly();
/// Phi_w = -f123 - f456 - f7^(f14 - 2f25 + f36) - f8^(f14 + f25 - 2f36).
DualTrivector phi_w_reference();

/// Factors P_x. With a transport (t, g) such that x = (t, g) w, F is pinned by
/// F_x(v) = t^7 det(g)^3 F_w(g^-1 v). Without one, F is made primitive over Z
/// with a positive leading coefficient. Throws DegenerateOrbit when P_x = 0 and
/// FactorizationFailed when P_x lacks the expected structure.
InvariantPair factor_invariants(const QTrivector& x,
                                const std::optional<GroupElement<GaussianRational>>& transport = std::nullopt);
InvariantPair factor_invariants(const QTrivector& x, const GroupElement<Rational>& transport);

/// v^T M v'.
Rational polarize(const QuadraticForm& q, const std::vector<Rational>& v, const std::vector<Rational>& vp);

/// The third exterior power of v -> M v applied to x; throws DegenerateForm if det M = 0.
DualTrivector phi_from_gram(const QTrivector& x, const QMatrix& gram);
DualTrivector phi(const QTrivector& x,
                  const std::optional<GroupElement<GaussianRational>>& transport = std::nullopt);

/// False when P_x = 0; otherwise whether Q_x is non-degenerate.
bool is_semistable(const QTrivector& x);

/// t^16 det(g)^6: the value of the degree-16 invariant at (t, g) w.
template <ExactField K>
K delta_transport(const K& t, const Matrix<K>& g) {
  return pow(t, 16) * pow(g.det(), 6);
}

json to_json(const QuadraticForm& q);
QuadraticForm quadratic_form_from_json(const json& j);
json to_json(const InvariantPair& pair);
json to_json(const DualTrivector& phi);

}  // namespace pvs
