#include <doctest.h>

#include "pvs/golden.hpp"
#include "pvs/liealg.hpp"

#include <random>

using namespace pvs;

namespace {

using QVec = std::vector<Rational>;
using CVec = std::vector<GaussianRational>;

QPoly v(int i) { return QPoly::variable(8, i - 1); }
QVec e(int i) { return basis_vector<Rational>(i); }

QVec random_vec(std::mt19937_64& rng, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  QVec x(8);
  for (auto& c : x) c = Rational(d(rng), 1 + (d(rng) & 1));
  return x;
}

CVec random_cvec(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  CVec x(8);
  for (auto& c : x) c = GaussianRational(Rational(d(rng), 2), Rational(d(rng)));
  return x;
}

CPoly to_cpoly(const QPoly& p) {
  std::vector<CPoly::Term> terms(p.terms().begin(), p.terms().end());
  return CPoly::from_terms(p.arity(), terms);
}

QPoly q_w1_display() {
  return Rational(2048) * (-v(1) * v(1) + v(2) * v(2) + v(3) * v(3) - v(4) * v(4) + v(5) * v(5) + v(6) * v(6) -
                           Rational(4) * v(7) * v(7) + Rational(4) * v(7) * v(8) - Rational(4) * v(8) * v(8));
}
QPoly q_w2_display() {
  return Rational(2048) * (-v(1) * v(1) - v(2) * v(2) - v(3) * v(3) - v(4) * v(4) - v(5) * v(5) - v(6) * v(6) -
                           Rational(4) * v(7) * v(7) + Rational(4) * v(7) * v(8) - Rational(4) * v(8) * v(8));
}

}  // namespace

TEST_CASE("coordinate dictionary") {
  const QMatrix e12 = {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}};
  CHECK(coords_to_matrix(e(1)) == e12);
  CHECK(coords_to_matrix(e(8)) == QMatrix::diagonal({1, 0, -1}));
  CHECK(coords_to_matrix(e(7)) == QMatrix::diagonal({0, -1, 1}));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    const QVec x = random_vec(rng);
    CHECK(matrix_to_coords(coords_to_matrix(x)) == x);
  }
  CHECK_THROWS_AS(matrix_to_coords(QMatrix::identity(3)), NotTraceless);
}

TEST_CASE("ad matrices") {
  CHECK(ad_matrix(e(7)) == QMatrix::diagonal({1, -2, 1, -1, 2, -1, 0, 0}));
  CHECK(ad_matrix(e(8)).column(0) == e(1));
  CHECK(ad_matrix(QVec(8)).is_zero());
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    const QVec a = random_vec(rng), b = random_vec(rng);
    CHECK(ad_matrix(a) == golden_ad_table(a));
    const QMatrix A = ad_matrix(a), B = ad_matrix(b);
    CHECK(ad_matrix(bracket(a, b)) == A * B - B * A);
    CHECK(A * b == bracket(a, b));
    CHECK(ad_inverse(A) == a);
  }
}

TEST_CASE("Killing form and the quadratic invariant") {
  CHECK(killing_B(e(7), e(7)) == Rational(12));
  CHECK(killing_B(e(1), e(1)) == Rational(0));
  CHECK(killing_B(e(3), QVec(8)) == Rational(0));
  const QMatrix gram = QuadraticForm::from_poly(q_w_poly()).gram();
  QMatrix b(8, 8), tr(8, 8);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      b(i - 1, j - 1) = killing_B(e(i), e(j));
      tr(i - 1, j - 1) = (coords_to_matrix(e(i)) * coords_to_matrix(e(j))).trace();
    }
  CHECK(b == Rational(6) * gram);
  CHECK(tr == gram);

  // F_w(v) = det of the 3x3 matrix of linear forms.
  PolyMatrix<Rational> x(3, 8);
  for (int i = 1; i <= 8; ++i) {
    const QMatrix ei = coords_to_matrix(e(i));
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (!ei(r, c).is_zero()) x(r, c) += v(i) * ei(r, c);
  }
  CHECK(poly_det(x) == f_w_poly());
}

TEST_CASE("trilinear form C") {
  CHECK(trilinear_C(e(1), e(2), e(3)) == Rational(-6));
  std::mt19937_64 rng(3);
  const QVec a = random_vec(rng), c = random_vec(rng);
  CHECK(trilinear_C(a, a, c) == Rational(0));
  const DualTrivector phi_w = phi_w_reference();
  int mismatches = 0;
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      for (int k = j + 1; k <= 8; ++k)
        if (!(trilinear_C(e(i), e(j), e(k)) == Rational(6) * phi_w(i, j, k))) ++mismatches;
  CHECK(mismatches == 0);
}

TEST_CASE("transported maps") {
  std::mt19937_64 rng(4);
  const QVec a = random_vec(rng), b = random_vec(rng);
  CHECK(transport_l(QMatrix::identity(8), a) == ad_matrix(a));
  CHECK(transport_bracket(QMatrix::identity(8), a, b) == bracket(a, b));
  CHECK_THROWS_AS(transport_l(QMatrix(8, 8), a), SingularTransport);

  const CMatrix h1 = real_form(1).h;
  const CMatrix l = transport_l(h1, to_gaussian(a));
  CHECK(is_real(l));

  QMatrix h(8, 8);
  std::uniform_int_distribution<int> d(-2, 2);
  do {
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) h(i, j) = Rational(d(rng));
  } while (h.det().is_zero());
  for (int t = 0; t < 3; ++t) {
    const QVec x = random_vec(rng), y = random_vec(rng);
    CHECK(transport_l(h, m_xh(h, x)) == h * ad_matrix(x) * h.inverse());
    const QMatrix lx = transport_l(h, x), ly = transport_l(h, y);
    CHECK(transport_l(h, transport_bracket(h, x, y)) == lx * ly - ly * lx);
  }
  // l_x(A v) = [A, l_x(v)] for A = l_x(u), u a basis vector.
  int bad = 0;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      const QMatrix A = transport_l(h, e(i));
      const QMatrix lv = transport_l(h, e(j));
      if (!(transport_l(h, A * e(j)) == A * lv - lv * A)) ++bad;
    }
  CHECK(bad == 0);
}

TEST_CASE("real forms") {
  for (int i : {1, 2}) {
    const RealFormTransport rf = real_form(i);
    CHECK(rf.q * rf.q == QMatrix::identity(8));
    CHECK(rf.h.inverse() * rf.h.conj() == CMatrix::from(rf.q));
    CHECK(rf.h.det() == GaussianRational(Rational(0), Rational(-8)));
    CHECK(rf.w_i == (i == 1 ? builtin_w1() : builtin_w2()));
  }
  CHECK_THROWS(real_form(3));
}

TEST_CASE("su conditions") {
  const QMatrix h1 = QMatrix::diagonal({1, 1, -1});
  const QMatrix h2 = QMatrix::identity(3);
  const GaussianRational i = GaussianRational::i();
  CMatrix x = CMatrix::diagonal({i, i, GaussianRational(-2) * i});
  CHECK(su_check(h1, x));
  CMatrix e12(3, 3);
  e12(0, 1) = 1;
  CHECK_FALSE(su_check(h1, e12));
  CHECK(p_h(h1, e12)(1, 0) == GaussianRational(-1));
  CHECK_FALSE(su_check(h2, CMatrix::diagonal({1, -1, 0})));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const CMatrix y = coords_to_matrix(random_cvec(rng));
    CHECK(su_check(h1, y) == su_check_hermitian(h1, y));
    for (int k : {1, 2}) {
      const QVec r = random_vec(rng);
      const CMatrix s = to_su(k, r);
      CHECK(su_check(k == 1 ? h1 : h2, s));
      CHECK(su_check_hermitian(k == 1 ? h1 : h2, s));
    }
  }
  CHECK(to_su(1, QVec(8)).is_zero());
}

TEST_CASE("q conjugation intertwines p_H") {
  std::mt19937_64 rng(6);
  for (int i : {1, 2}) {
    const RealFormTransport rf = real_form(i);
    const CMatrix q = CMatrix::from(rf.q);
    for (int t = 0; t < 5; ++t) {
      const CVec z = random_cvec(rng);
      CVec zbar(8);
      for (int k = 0; k < 8; ++k) zbar[k] = z[k].conj();
      const CMatrix lhs = q * ad_matrix(zbar) * q.inverse();
      const CMatrix rhs = ad_matrix(matrix_to_coords(p_h(rf.h_form, coords_to_matrix(z))));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("invariants of the real-form points") {
  std::mt19937_64 rng(7);
  const QPoly displays[] = {q_w1_display(), q_w2_display()};
  for (int i : {1, 2}) {
    const RealFormTransport rf = real_form(i);
    const auto transport = builtin_transport(i == 1 ? "w1" : "w2");
    REQUIRE(transport);
    const InvariantPair pair = factor_invariants(rf.w_i, transport);
    CHECK(pair.sign_exact);
    CHECK(pair.q.to_poly() == displays[i - 1]);

    const CMatrix hinv = rf.h.inverse();
    const GaussianRational i_unit = GaussianRational::i();
    CHECK(to_cpoly(pair.q.to_poly()) == GaussianRational(4096) * linear_substitute(to_cpoly(q_w_poly()), hinv));
    CHECK(to_cpoly(pair.f.poly()) == GaussianRational(512) * i_unit * linear_substitute(to_cpoly(f_w_poly()), hinv));

    for (int t = 0; t < 5; ++t) {
      const QVec r = random_vec(rng);
      const CMatrix x = to_su(i, r);
      CHECK(GaussianRational(pair.q.to_poly().eval(r)) == GaussianRational(4096) * (x * x).trace());
      CHECK(GaussianRational(pair.f.poly().eval(r)) == GaussianRational(512) * i_unit * x.det());
    }
  }
  CHECK(signature(QuadraticForm::from_poly(q_w_poly())) == std::pair{5, 3});
  CHECK(signature(QuadraticForm::from_poly(q_w1_display())) == std::pair{4, 4});
  CHECK(signature(QuadraticForm::from_poly(q_w2_display())) == std::pair{0, 8});
  const auto deg = signature(QuadraticForm::from_poly(q_wprime_poly()));
  CHECK(deg.first + deg.second < 8);
  CHECK(signature(QMatrix::diagonal({0, 0, 1})) == std::pair{1, 0});
  CHECK_FALSE(builtin_transport("wprime"));
}
