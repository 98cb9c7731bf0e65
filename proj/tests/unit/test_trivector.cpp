#include <doctest.h>

#include "pvs/golden.hpp"
#include "pvs/trivector.hpp"

#include <bit>
#include <random>

using namespace pvs;

namespace {

QPoly v(int i) { return QPoly::variable(8, i - 1); }

QPoly q_w() {
  return Rational(2) * (-v(1) * v(4) - v(2) * v(5) - v(3) * v(6) + v(7) * v(7) - v(7) * v(8) + v(8) * v(8));
}
QPoly f_w() {
  return -v(1) * v(2) * v(3) + v(1) * v(4) * v(7) - v(1) * v(4) * v(8) + v(2) * v(5) * v(8) - v(3) * v(6) * v(7) +
         v(4) * v(5) * v(6) - v(7) * v(7) * v(8) + v(7) * v(8) * v(8);
}
QPoly q_wprime() { return Rational(2) * (-v(3) * v(3) - v(4) * v(4) + v(5) * v(5)); }
QPoly f_wprime() {
  return -v(1) * v(3) * v(5) + v(2) * v(3) * v(4) + v(3) * v(3) * v(7) + v(4) * v(5) * v(6) - v(4) * v(4) * v(7) +
         v(4) * v(4) * v(8) + v(5) * v(5) * v(8);
}

// Independent oracle: exterior forms as bitmask-indexed maps, wedge by
// counting inversions between index sets.
using Form = std::map<unsigned, Rational>;

int wedge_sign(unsigned a, unsigned b) {
  // Number of pairs (i in a, j in b) with i > j.
  int inv = 0;
  for (int i = 0; i < 32; ++i)
    if (a >> i & 1) inv += std::popcount(b & ((1u << i) - 1));
  return inv % 2 ? -1 : 1;
}

Form wedge(const Form& x, const Form& y) {
  Form r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      if (a & b) continue;
      r[a | b] += Rational(wedge_sign(a, b)) * ca * cb;
    }
  return r;
}

SMatrix<Rational> naive_s_matrix(const QTrivector& x) {
  Form xf;
  for (const auto& [t, c] : x.terms()) xf[(1u << t[0]) | (1u << t[1]) | (1u << t[2])] += c;
  // alpha[s] = the 2-form paired with slot s in D3(x).
  std::array<Form, 9> alpha;
  for (const auto& [t, c] : x.terms()) {
    alpha[t[0]][(1u << t[1]) | (1u << t[2])] += c;
    alpha[t[1]][(1u << t[0]) | (1u << t[2])] -= c;
    alpha[t[2]][(1u << t[0]) | (1u << t[1])] += c;
  }
  SMatrix<Rational> s;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      const Form seven = wedge(wedge(xf, alpha[i]), alpha[j]);
      for (const auto& [mask, c] : seven) {
        int k = 1;
        while (mask >> k & 1) ++k;
        s(i - 1, j - 1)[k - 1] += (k % 2 ? c : -c);
      }
    }
  return s;
}

QTrivector random_trivector(std::mt19937_64& rng, int nterms) {
  std::uniform_int_distribution<int> idx(1, 8), c(-3, 3);
  QTrivector x;
  for (int n = 0; n < nterms; ++n) x.add(idx(rng), idx(rng), idx(rng), Rational(c(rng)));
  return x;
}

GroupElement<Rational> random_group_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-2, 2);
  for (;;) {
    QMatrix g(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) g(i, j) = Rational(e(rng));
    int t = e(rng);
    if (t == 0 || g.det().is_zero()) continue;
    return {Rational(t), g};
  }
}

}  // namespace

TEST_CASE("wedge_canonicalize") {
  auto a = wedge_canonicalize(2, 1, 3, Rational(5));
  REQUIRE(a);
  CHECK(a->first == Triple{1, 2, 3});
  CHECK(a->second == Rational(-5));
  CHECK_FALSE(wedge_canonicalize(1, 1, 2, Rational(1)));
  auto b = wedge_canonicalize(4, 5, 6, Rational(1));
  CHECK(b->first == Triple{4, 5, 6});
  CHECK(b->second == Rational(1));
  CHECK_THROWS_AS(wedge_canonicalize(0, 1, 2, Rational(1)), IndexOutOfRange);
  CHECK_THROWS_AS(wedge_canonicalize(1, 2, 9, Rational(1)), IndexOutOfRange);
}

TEST_CASE("group action") {
  const QTrivector w = builtin_w();
  CHECK(w.size() == 6);
  CHECK(act(GroupElement<Rational>(Rational(3), QMatrix::identity(8)), w) == Rational(3) * w);
  CHECK(act(builtin_tau(), w) == w);
  QTrivector e123;
  e123.add(1, 2, 3, Rational(1));
  CHECK(act(GroupElement<Rational>(Rational(1), QMatrix::diagonal({2, 1, 1, 1, 1, 1, 1, 1})), e123) ==
        Rational(2) * e123);
  CHECK_THROWS_AS(GroupElement<Rational>(Rational(0), QMatrix::identity(8)), InvalidGroupElement);
  CHECK_THROWS_AS(GroupElement<Rational>(Rational(1), QMatrix(8, 8)), InvalidGroupElement);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto e1 = random_group_element(rng), e2 = random_group_element(rng);
    const QTrivector x = random_trivector(rng, 6);
    CHECK(act(e1, act(e2, x)) == act(e1 * e2, x));
  }
}

TEST_CASE("d3") {
  QTrivector e123;
  e123.add(1, 2, 3, Rational(1));
  const auto d = d3(e123);
  REQUIRE(d.size() == 3);
  CHECK(d.terms().at({{2, 3}, 1}) == Rational(1));
  CHECK(d.terms().at({{1, 3}, 2}) == Rational(-1));
  CHECK(d.terms().at({{1, 2}, 3}) == Rational(1));
  CHECK(d3(QTrivector{}).is_zero());
  CHECK(d3(builtin_w()).size() == 18);
}

TEST_CASE("s_matrix against the reference matrices and a naive oracle") {
  const auto sw = s_matrix(builtin_w());
  CHECK(sw == golden_s_matrix("w"));
  CHECK(SMatrix<Rational>::covector_str(sw(0, 1)) == "3f6");
  CHECK(SMatrix<Rational>::covector_str(sw(6, 6)) == "-2f7");
  CHECK(SMatrix<Rational>::covector_str(sw(0, 6)) == "-f1");
  const auto swp = s_matrix(builtin_wprime());
  CHECK(swp == golden_s_matrix("wprime"));
  CHECK(SMatrix<Rational>::covector_str(swp(0, 0)) == "6f7 - 6f8");
  CHECK(s_matrix(QTrivector{}).is_zero());

  CHECK(naive_s_matrix(builtin_w()) == sw);
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 3; ++trial) {
    const QTrivector x = random_trivector(rng, 10);
    const auto s = s_matrix(x);
    CHECK(s.is_symmetric());
    CHECK(naive_s_matrix(x) == s);
  }
}

TEST_CASE("p_poly") {
  QTrivector e123;
  e123.add(1, 2, 3, Rational(1));
  CHECK(p_poly(e123).is_zero());
  const QPoly pw = p_poly(builtin_w());
  CHECK(pw.is_homogeneous(8));
  // Exact value of the determinant for w: +1458 Q_w F_w^2.
  CHECK(pw == Rational(1458) * q_w() * f_w() * f_w());
  CHECK(exact_divide(pw, q_w()) == Rational(1458) * f_w() * f_w());
  CHECK(p_poly(builtin_wprime()) == Rational(-1458) * q_wprime() * f_wprime() * f_wprime());
}

TEST_CASE("S and P covariance") {
  std::mt19937_64 rng(29);
  const QTrivector w = builtin_w();
  const auto sw = s_matrix(w);
  const QPoly pw = p_poly(w);
  for (int trial = 0; trial < 2; ++trial) {
    const auto el = random_group_element(rng);
    const QTrivector gx = act(el, w);
    CHECK(s_matrix(gx).to_poly_matrix() == transported_s(el, sw));
    const Rational d = el.g.det();
    CHECK(p_poly(gx) == pow(el.t, 24) * pow(d, 10) * linear_substitute(pw, el.g.inverse()));
  }
}

TEST_CASE("trivector JSON") {
  const QTrivector w = builtin_w();
  const json j = to_json(w);
  CHECK(j["terms"][0]["ijk"] == json::array({1, 2, 3}));
  CHECK(trivector_from_json<Rational>(j) == w);
  const auto tau = builtin_tau();
  const auto back = group_element_from_json<Rational>(to_json(tau));
  CHECK(back.g == tau.g);
  CHECK(back.t == tau.t);
  CHECK(parse_covector("2f8-2f7")[6] == Rational(-2));
  CHECK_THROWS_AS(parse_covector("3g1"), ParseError);
}
