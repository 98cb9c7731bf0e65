#include <doctest.h>

#include "pvs/invariants.hpp"

#include <random>

using namespace pvs;

namespace {

QPoly v(int i) { return QPoly::variable(8, i - 1); }

std::vector<Rational> e(int i) {
  std::vector<Rational> x(8);
  x[i - 1] = 1;
  return x;
}

GroupElement<Rational> random_group_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    QMatrix g(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) g(i, j) = Rational(d(rng));
    const int t = d(rng);
    if (t == 0 || g.det().is_zero()) continue;
    return {Rational(t), g};
  }
}

/// Returns c with a = c * b, or nullopt when a and b are not proportional.
std::optional<Rational> ratio(const QPoly& a, const QPoly& b) {
  if (a.size() != b.size() || a.is_zero()) return std::nullopt;
  const Rational c = a.leading().second / b.leading().second;
  if (!(a == b * c)) return std::nullopt;
  return c;
}

}  // namespace

TEST_CASE("factorization at w") {
  const QTrivector w = builtin_w();
  const InvariantPair plain = factor_invariants(w);
  CHECK(plain.q.to_poly() == q_w_poly());
  CHECK(plain.f.poly() == -f_w_poly());  // normalized: leading term v1 v2 v3 gets coefficient +1
  CHECK_FALSE(plain.sign_exact);
  CHECK(plain.p == kFactorConstant * q_w_poly() * f_w_poly() * f_w_poly());

  const InvariantPair pinned = factor_invariants(w, GroupElement<Rational>::identity());
  CHECK(pinned.q.to_poly() == q_w_poly());
  CHECK(pinned.f.poly() == f_w_poly());
  CHECK(pinned.sign_exact);

  CHECK_THROWS_AS(factor_invariants(w, builtin_tau() * GroupElement<Rational>(Rational(2), QMatrix::identity(8))),
                  Error);
}

TEST_CASE("factorization at wprime") {
  const InvariantPair pair = factor_invariants(builtin_wprime());
  // The published pair satisfies P = -1458 Q F^2, so with the +1458 convention Q flips sign.
  CHECK(pair.p == Rational(-1458) * q_wprime_poly() * f_wprime_poly() * f_wprime_poly());
  CHECK(pair.q.to_poly() == -q_wprime_poly());
  CHECK(pair.f.poly() == -f_wprime_poly());
  CHECK(pair.q.discriminant().is_zero());
}

TEST_CASE("factorization at w1 without transport fixes F up to scale") {
  const QPoly q_w1 = Rational(2048) * (-v(1) * v(1) + v(2) * v(2) + v(3) * v(3) - v(4) * v(4) + v(5) * v(5) +
                                       v(6) * v(6) - Rational(4) * v(7) * v(7) + Rational(4) * v(7) * v(8) -
                                       Rational(4) * v(8) * v(8));
  const InvariantPair pair = factor_invariants(builtin_w1());
  auto r = ratio(pair.q.to_poly(), q_w1);
  REQUIRE(r);
  Rational root;
  CHECK(rational_sqrt(*r, root));  // Q is determined up to a square factor
}

TEST_CASE("degenerate inputs") {
  QTrivector e123;
  e123.add(1, 2, 3, Rational(1));
  CHECK_THROWS_AS(factor_invariants(e123), DegenerateOrbit);
  CHECK_THROWS_AS(factor_invariants(QTrivector{}), DegenerateOrbit);
  CHECK_FALSE(is_semistable(QTrivector{}));
  CHECK_FALSE(is_semistable(e123));
  CHECK_FALSE(is_semistable(builtin_wprime()));
  CHECK(is_semistable(builtin_w()));
  CHECK(QuadraticForm::from_poly(q_w_poly()).discriminant() == Rational(-3));
}

TEST_CASE("polarization") {
  const auto q = QuadraticForm::from_poly(q_w_poly());
  CHECK(polarize(q, e(7), e(7)) == Rational(2));
  CHECK(polarize(q, e(1), e(4)) == Rational(-1));
  CHECK(polarize(q, e(3), std::vector<Rational>(8)) == Rational(0));
  const std::vector<Rational> a = {1, 2, -1, 0, 3, Rational(1, 2), -2, 1};
  CHECK(polarize(q, a, a) == q_w_poly().eval(a));
  CHECK(q.to_poly() == q_w_poly());
  CHECK(q.gram()(0, 3) == Rational(-1));
  CHECK_THROWS(QuadraticForm::from_poly(v(1)));
}

TEST_CASE("Phi at w") {
  const DualTrivector p = phi(builtin_w());
  CHECK(p == phi_w_reference());
  CHECK(p(1, 2, 3) == Rational(-1));
  CHECK(p(2, 1, 3) == Rational(1));
  CHECK(phi(builtin_w(), GroupElement<GaussianRational>::identity()) == phi_w_reference());
  CHECK_THROWS_AS(phi_from_gram(builtin_w(), QMatrix(8, 8)), DegenerateForm);
}

TEST_CASE("delta_transport") {
  CHECK(delta_transport(Rational(1), QMatrix::identity(8)) == Rational(1));
  CHECK(delta_transport(Rational(2), QMatrix::identity(8)) == Rational(65536));
  CHECK(delta_transport(Rational(1), QMatrix::diagonal({2, 1, 1, 1, 1, 1, 1, 1})) == Rational(64));
}

TEST_CASE("covariance of Q, F and Phi on transported points") {
  std::mt19937_64 rng(41);
  const QTrivector w = builtin_w();
  const DualTrivector phi_w = phi_w_reference();
  for (int trial = 0; trial < 2; ++trial) {
    const auto el = random_group_element(rng);
    const QTrivector x = act(el, w);
    const Rational d = el.g.det();
    const QMatrix ginv = el.g.inverse();
    const InvariantPair pair = factor_invariants(x, el);
    CHECK(pair.sign_exact);
    CHECK(pair.q.to_poly() == pow(el.t, 10) * pow(d, 4) * linear_substitute(q_w_poly(), ginv));
    CHECK(pair.f.poly() == pow(el.t, 7) * pow(d, 3) * linear_substitute(f_w_poly(), ginv));
    CHECK(pair.q.to_poly().degree() == 2);
    CHECK(pair.f.poly().degree() == 3);

    const DualTrivector px = phi_from_gram(x, pair.q.gram());
    const auto contragredient = GroupElement<Rational>(Rational(1), ginv.transpose());
    CHECK(px.coeffs == pow(el.t, 31) * pow(d, 12) * act(contragredient, phi_w.coeffs));

    // Without the transport Q is recovered up to a square factor and F up to its inverse.
    const InvariantPair plain = factor_invariants(x);
    auto rq = ratio(plain.q.to_poly(), pair.q.to_poly());
    auto rf = ratio(plain.f.poly(), pair.f.poly());
    REQUIRE(rq);
    REQUIRE(rf);
    CHECK(*rq * *rf * *rf == Rational(1));
  }
}

TEST_CASE("invariant JSON") {
  const auto pair = factor_invariants(builtin_w(), GroupElement<Rational>::identity());
  const json j = to_json(pair);
  CHECK(j["sign_exact"] == true);
  CHECK(quadratic_form_from_json(j["q"]) == pair.q);
  CHECK(poly_from_json<Rational>(j["f"]) == f_w_poly());
  CHECK(to_json(phi_w_reference())["terms"][0].contains("fijk"));
}
