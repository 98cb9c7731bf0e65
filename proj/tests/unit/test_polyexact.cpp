#include <doctest.h>

#include "pvs/codec.hpp"
#include "pvs/matrix.hpp"
#include "pvs/univariate.hpp"

#include <random>

using namespace pvs;

namespace {

QPoly v(int i, int arity = 8) { return QPoly::variable(arity, i - 1); }
QPoly k(long c, int arity = 8) { return QPoly::constant(arity, Rational(c)); }

QPoly random_poly(std::mt19937_64& rng, int arity, int max_deg, int nterms) {
  std::uniform_int_distribution<int> coef(-5, 5), var(0, arity - 1), deg(0, max_deg);
  std::vector<QPoly::Term> terms;
  for (int t = 0; t < nterms; ++t) {
    Monomial m;
    const int d = deg(rng);
    for (int s = 0; s < d; ++s) ++m.e[var(rng)];
    terms.emplace_back(m, Rational(coef(rng)));
  }
  return QPoly::from_terms(arity, terms);
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational::parse(" -2/7 ") == Rational(-2, 7));
  CHECK(Rational::parse("10/4").str() == "5/2");
  CHECK(Rational::parse("+3") == Rational(3));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  Rational r;
  CHECK(rational_sqrt(Rational(9, 4), r));
  CHECK(r == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(2), r));
}

TEST_CASE("gaussian rationals") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK(i.conj().conj() == i);
  const GaussianRational z(Rational(3), Rational(-4));
  CHECK(z.norm() == Rational(25));
  CHECK(z / z == GaussianRational(1));
  CHECK(pow(GaussianRational(Rational(0), Rational(-8)), 3) == GaussianRational(Rational(0), Rational(512)));
  GaussianRational s;
  CHECK(gaussian_sqrt(GaussianRational(Rational(0), Rational(2)), s));  // (1+i)^2 = 2i
  CHECK(s == GaussianRational(Rational(1), Rational(1)));
  CHECK(gaussian_sqrt(GaussianRational(-4), s));
  CHECK(s == GaussianRational(Rational(0), Rational(2)));
  CHECK_FALSE(gaussian_sqrt(GaussianRational(Rational(0), Rational(1)), s));
}

TEST_CASE("graded-lex order and printing") {
  const QPoly p = v(8) + v(1) * v(2) + v(1) * v(1) + k(3);
  REQUIRE(p.size() == 4);
  CHECK(p.str() == "v1^2 + v1*v2 + v8 + 3");
  CHECK(p.degree() == 2);
  CHECK((p - p).is_zero());
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const QPoly p = random_poly(rng, 8, 3, 6), q = random_poly(rng, 8, 3, 6), r = random_poly(rng, 8, 2, 5);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    // Evaluation is a ring homomorphism.
    std::vector<Rational> pt = {1, -2, 3, Rational(1, 2), 0, 5, -1, 2};
    CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
  }
}

TEST_CASE("exact_divide") {
  CHECK(exact_divide(v(1) * v(1) - v(2) * v(2), v(1) - v(2)) == v(1) + v(2));
  CHECK_THROWS_AS(exact_divide(v(1), v(2)), NotDivisible);
  CHECK_THROWS_AS(exact_divide(v(1), QPoly(8)), NotDivisible);
  CHECK_THROWS_AS(exact_divide(v(1), v(1, 3)), DimensionMismatch);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const QPoly p = random_poly(rng, 8, 4, 8);
    QPoly q = random_poly(rng, 8, 3, 5);
    if (q.is_zero()) q = k(1);
    CHECK(exact_divide(p * q, q) == p);
    if (q.degree() > 0 && !p.is_zero()) CHECK_THROWS_AS(exact_divide(p * q + k(1), q), NotDivisible);
  }
}

TEST_CASE("poly_sqrt") {
  CHECK(poly_sqrt((v(1) + v(2)) * (v(1) + v(2))) == v(1) + v(2));
  CHECK(poly_sqrt((v(2) - v(1)) * (v(2) - v(1))) == v(1) - v(2));
  CHECK_THROWS_AS(poly_sqrt(v(1) * v(2)), NotAPerfectSquare);
  CHECK_THROWS_AS(poly_sqrt(Rational(2) * v(1) * v(1)), NotAPerfectSquare);
  CHECK_THROWS_AS(poly_sqrt(v(1) * v(1) + v(2) * v(2)), NotAPerfectSquare);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const QPoly p = random_poly(rng, 8, 3, 7);
    if (p.is_zero()) continue;
    const QPoly s = poly_sqrt(p * p);
    CHECK((s == p || s == -p));
    CHECK(s.leading().second.sign() > 0);
  }
  // Over Q(i): (i*v1 + v2)^2 has leading coefficient -1; the root with leading +i is kept.
  const CPoly z = CPoly::variable(2, 0, GaussianRational::i()) + CPoly::variable(2, 1);
  CHECK(poly_sqrt(z * z) == z);
  CHECK(poly_sqrt((-z) * (-z)) == z);
}

TEST_CASE("poly_det") {
  PolyMatrix<Rational> id = PolyMatrix<Rational>::constant(QMatrix::identity(8), 8);
  CHECK(poly_det(id) == k(1));
  PolyMatrix<Rational> d(8, 8);
  QPoly prod = k(1);
  for (int i = 0; i < 8; ++i) {
    d(i, i) = v(i + 1);
    prod *= v(i + 1);
  }
  CHECK(poly_det(d) == prod);
  CHECK(poly_det(PolyMatrix<Rational>(8, 8)).is_zero());

  // Multiplicativity against an elimination-based oracle.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix a(4, 4), b(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        a(i, j) = Rational(e(rng));
        b(i, j) = Rational(e(rng), 3);
      }
    const auto det = [](const QMatrix& m) {
      return poly_det(PolyMatrix<Rational>::constant(m, 1)).coefficient(Monomial{});
    };
    CHECK(det(a * b) == det(a) * det(b));
    CHECK(det(a) == a.det());
  }

  // A 2x2 symbolic determinant.
  PolyMatrix<Rational> s(2, 8);
  s(0, 0) = v(1);
  s(0, 1) = v(2);
  s(1, 0) = v(3);
  s(1, 1) = v(4);
  CHECK(poly_det(s) == v(1) * v(4) - v(2) * v(3));
}

TEST_CASE("linear_substitute") {
  const QPoly qw = Rational(2) * (-v(1) * v(4) - v(2) * v(5) - v(3) * v(6) + v(7) * v(7) - v(7) * v(8) + v(8) * v(8));
  std::mt19937_64 rng(17);
  const QPoly p = random_poly(rng, 8, 4, 10);
  CHECK(linear_substitute(p, QMatrix::identity(8)) == p);
  QMatrix swap = QMatrix::identity(8);
  swap(0, 0) = swap(3, 3) = 0;
  swap(0, 3) = swap(3, 0) = 1;
  CHECK(linear_substitute(qw, swap) == qw);
  CHECK_THROWS_AS(linear_substitute(qw, QMatrix::identity(7)), DimensionMismatch);

  // Composition: p(A(Bv)) = (p o A) o B; pointwise check against evaluation.
  QMatrix a(8, 8);
  std::uniform_int_distribution<int> e(-2, 2);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) a(i, j) = Rational(e(rng));
  const QPoly pa = linear_substitute(p, a);
  const std::vector<Rational> pt = {2, -1, 0, 3, Rational(1, 2), -2, 1, 1};
  CHECK(pa.eval(pt) == p.eval(a * pt));
}

TEST_CASE("univariate gcd and interpolation") {
  // (x-1)^2 (x+2)
  const UniPoly p({Rational(2), Rational(-3), Rational(0), Rational(1)});
  const UniPoly g = UniPoly::gcd(p, p.derivative());
  CHECK(g == UniPoly({Rational(-1), Rational(1)}));
  std::vector<Rational> xs, ys;
  for (int x = 0; x < 4; ++x) {
    xs.emplace_back(x);
    ys.push_back(p.eval(Rational(x)));
  }
  CHECK(UniPoly::interpolate(xs, ys) == p);
}

TEST_CASE("JSON round trip is canonical") {
  std::mt19937_64 rng(23);
  const QPoly p = random_poly(rng, 8, 3, 12) * Rational(3, 7);
  const json j = to_json(p);
  CHECK(poly_from_json<Rational>(j) == p);
  CHECK(to_json(poly_from_json<Rational>(j)).dump() == j.dump());
  CHECK(j["terms"][0]["c"].is_string());

  const CPoly z = CPoly::variable(3, 2, GaussianRational(Rational(1, 2), Rational(-1)));
  CHECK(poly_from_json<GaussianRational>(to_json(z)) == z);
  CHECK(to_json(z)["terms"][0]["c"]["im"] == "-1");

  CHECK_THROWS_AS(poly_from_json<Rational>(json::parse(R"({"arity":2,"terms":[{"exp":[1],"c":"1"}]})")), ParseError);
  const QMatrix m = {{Rational(1), Rational(-1, 2)}, {Rational(0), Rational(5)}};
  CHECK(matrix_from_json<Rational>(to_json(m)) == m);
}
