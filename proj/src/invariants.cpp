#include "pvs/invariants.hpp"

#include "pvs/univariate.hpp"

#include <random>

namespace pvs {

namespace {

QPoly var(int i) { return QPoly::variable(kDim, i - 1); }

QPoly monomial(std::initializer_list<int> idx, long c) {
  QPoly p = QPoly::constant(kDim, Rational(c));
  for (int i : idx) p *= var(i);
  return p;
}

QPoly sum(std::initializer_list<QPoly> parts) {
  QPoly r(kDim);
  for (const auto& p : parts) r += p;
  return r;
}

CPoly to_gaussian(const QPoly& p) {
  std::vector<CPoly::Term> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(m, c);
  return CPoly::from_terms(p.arity(), std::move(terms));
}

/// Scales p to integer coefficients with gcd 1 and a positive leading coefficient.
QPoly primitive_part(const QPoly& p) {
  mpz_class den = 1, num = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.raw().get_num_mpz_t());
  }
  Rational scale(mpq_class(den, num));
  if (p.leading().second.sign() < 0) scale = -scale;
  return p * scale;
}

/// Degree-2 monomials v_i v_j (i <= j) in graded-lex order.
std::vector<std::pair<int, int>> quadratic_monomials() {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) out.emplace_back(i, j);
  return out;
}

/// Up to a common nonzero factor, Q(a) read off from the restriction of
/// P = c Q F^2 to the line a + s b: p / gcd(p, p')^2 at s = 0.
std::optional<Rational> scaled_q_on_line(const QPoly& p, const std::vector<Rational>& a,
                                         const std::vector<Rational>& b) {
  std::vector<Rational> xs, ys;
  for (int s = 0; s <= 8; ++s) {
    std::vector<Rational> pt(kDim);
    for (int i = 0; i < kDim; ++i) pt[i] = a[i] + Rational(s) * b[i];
    xs.emplace_back(s);
    ys.push_back(p.eval(pt));
  }
  const UniPoly line = UniPoly::interpolate(xs, ys);
  if (line.degree() != 8) return std::nullopt;
  const UniPoly g = UniPoly::gcd(line, line.derivative());
  if (g.degree() != 3) return std::nullopt;
  UniPoly rem;
  const UniPoly r = UniPoly::divmod(line, g * g, rem);
  if (!rem.is_zero() || r.degree() != 2) return std::nullopt;
  return r.coefficient(0);
}

/// Q up to a nonzero rational factor, by interpolation over 36 lines sharing one direction.
QPoly scaled_quadratic_factor(const QPoly& p) {
  std::mt19937_64 rng(0x51u);
  std::uniform_int_distribution<int> dir(-3, 3), pos(-6, 6);
  const auto monos = quadratic_monomials();
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Rational> b(kDim);
    for (auto& x : b) x = Rational(dir(rng));
    if (p.eval(b).is_zero()) continue;
    QMatrix system(static_cast<int>(monos.size()), static_cast<int>(monos.size()));
    std::vector<Rational> rhs;
    int row = 0, misses = 0;
    while (row < static_cast<int>(monos.size()) && misses < 200) {
      std::vector<Rational> a(kDim);
      for (auto& x : a) x = Rational(pos(rng));
      auto value = scaled_q_on_line(p, a, b);
      if (!value) {
        ++misses;
        continue;
      }
      for (std::size_t col = 0; col < monos.size(); ++col) system(row, static_cast<int>(col)) = a[monos[col].first] * a[monos[col].second];
      rhs.push_back(*value);
      ++row;
    }
    if (row < static_cast<int>(monos.size())) continue;
    auto coeffs = system.solve(rhs);
    if (!coeffs) continue;
    QPoly q(kDim);
    for (std::size_t col = 0; col < monos.size(); ++col)
      q += var(monos[col].first + 1) * var(monos[col].second + 1) * (*coeffs)[col];
    if (!q.is_zero()) return q;
  }
  throw FactorizationFailed("no square-free quadratic factor found on generic lines");
}

InvariantPair finish(const QPoly& p, QPoly f, bool sign_exact) {
  QPoly q;
  try {
    q = exact_divide(p, kFactorConstant * f * f);
  } catch (const NotDivisible&) {
    throw FactorizationFailed("P is not divisible by 1458 F^2");
  }
  if (q.degree() != 2 || !q.is_homogeneous(2)) throw FactorizationFailed("quotient P / (1458 F^2) is not a quadratic form");
  return {QuadraticForm::from_poly(q), CubicForm(std::move(f)), sign_exact, p};
}

}  // namespace

QuadraticForm::QuadraticForm(QMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != kDim || gram_.cols() != kDim) throw DimensionMismatch("Gram matrix must be 8x8");
  if (!(gram_ == gram_.transpose())) throw Error("Gram matrix must be symmetric");
}

QuadraticForm QuadraticForm::from_poly(const QPoly& p) {
  if (p.arity() != kDim) throw DimensionMismatch("quadratic form must have 8 variables");
  if (!p.is_homogeneous(2)) throw Error("not a homogeneous quadratic: " + p.str());
  QMatrix m(kDim, kDim);
  for (const auto& [mono, c] : p.terms()) {
    std::vector<int> idx;
    for (int i = 0; i < kDim; ++i)
      for (int r = 0; r < mono.e[i]; ++r) idx.push_back(i);
    if (idx[0] == idx[1]) {
      m(idx[0], idx[0]) = c;
    } else {
      m(idx[0], idx[1]) = c / Rational(2);
      m(idx[1], idx[0]) = c / Rational(2);
    }
  }
  return QuadraticForm(m);
}

QPoly QuadraticForm::to_poly() const {
  QPoly p(kDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      const Rational c = i == j ? gram_(i, i) : Rational(2) * gram_(i, j);
      if (!c.is_zero()) p += var(i + 1) * var(j + 1) * c;
    }
  return p;
}

Rational QuadraticForm::operator()(const std::vector<Rational>& v) const { return polarize(*this, v, v); }

CubicForm::CubicForm(QPoly p) : poly_(std::move(p)) {
  if (poly_.arity() != kDim) throw DimensionMismatch("cubic form must have 8 variables");
  if (!poly_.is_homogeneous(3)) throw Error("not a homogeneous cubic: " + poly_.str());
}

QPoly q_w_poly() {
  return sum({monomial({1, 4}, -2), monomial({2, 5}, -2), monomial({3, 6}, -2), monomial({7, 7}, 2),
              monomial({7, 8}, -2), monomial({8, 8}, 2)});
}

QPoly f_w_poly() {
  return sum({monomial({1, 2, 3}, -1), monomial({1, 4, 7}, 1), monomial({1, 4, 8}, -1), monomial({2, 5, 8}, 1),
              monomial({3, 6, 7}, -1), monomial({4, 5, 6}, 1), monomial({7, 7, 8}, -1), monomial({7, 8, 8}, 1)});
}

QPoly q_wprime_poly() { return sum({monomial({3, 3}, -2), monomial({4, 4}, -2), monomial({5, 5}, 2)}); }

QPoly f_wprime_poly() {
  return sum({monomial({1, 3, 5}, -1), monomial({2, 3, 4}, 1), monomial({3, 3, 7}, 1), monomial({4, 5, 6}, 1),
              monomial({4, 4, 7}, -1), monomial({4, 4, 8}, 1), monomial({5, 5, 8}, 1)});
}

DualTrivector phi_w_reference() {
  DualTrivector d;
  d.coeffs.add(1, 2, 3, Rational(-1))
      .add(4, 5, 6, Rational(-1))
      .add(7, 1, 4, Rational(-1))
      .add(7, 2, 5, Rational(2))
      .add(7, 3, 6, Rational(-1))
      .add(8, 1, 4, Rational(-1))
      .add(8, 2, 5, Rational(-1))
      .add(8, 3, 6, Rational(2));
  return d;
}

InvariantPair factor_invariants(const QTrivector& x, const std::optional<GroupElement<GaussianRational>>& transport) {
  const QPoly p = p_poly(x);
  if (p.is_zero()) throw DegenerateOrbit("P_x vanishes identically");
  if (transport) {
    if (!(act(*transport, Trivector<GaussianRational>::from(builtin_w())) == Trivector<GaussianRational>::from(x)))
      throw Error("transport does not carry w to x");
    const auto& [t, g] = *transport;
    CPoly f = linear_substitute(to_gaussian(f_w_poly()), g.inverse());
    f *= pow(t, 7) * pow(g.det(), 3);
    std::vector<QPoly::Term> real_terms;
    for (const auto& [m, c] : f.terms()) {
      if (!c.is_real()) throw FactorizationFailed("transported F is not rational");
      real_terms.emplace_back(m, c.re());
    }
    return finish(p, QPoly::from_terms(kDim, std::move(real_terms)), true);
  }
  const QPoly q_scaled = scaled_quadratic_factor(p);
  QPoly f;
  try {
    f = poly_sqrt(exact_divide(p, q_scaled));
  } catch (const NotDivisible&) {
    throw FactorizationFailed("quadratic factor does not divide P");
  } catch (const NotAPerfectSquare&) {
    throw FactorizationFailed("cofactor of the quadratic factor is not a square");
  }
  return finish(p, primitive_part(f), false);
}

InvariantPair factor_invariants(const QTrivector& x, const GroupElement<Rational>& transport) {
  return factor_invariants(x, GroupElement<GaussianRational>::from(transport));
}

Rational polarize(const QuadraticForm& q, const std::vector<Rational>& v, const std::vector<Rational>& vp) {
  if (v.size() != kDim || vp.size() != kDim) throw DimensionMismatch("polarize expects 8-vectors");
  const auto mv = q.gram() * vp;
  Rational s;
  for (int i = 0; i < kDim; ++i) s += v[i] * mv[i];
  return s;
}

DualTrivector phi_from_gram(const QTrivector& x, const QMatrix& gram) {
  if (gram.det().is_zero()) throw DegenerateForm("quadratic invariant is degenerate");
  return {act(GroupElement<Rational>(Rational(1), gram), x)};
}

DualTrivector phi(const QTrivector& x, const std::optional<GroupElement<GaussianRational>>& transport) {
  return phi_from_gram(x, factor_invariants(x, transport).q.gram());
}

bool is_semistable(const QTrivector& x) {
  if (p_poly(x).is_zero()) return false;
  return !factor_invariants(x).q.discriminant().is_zero();
}

json to_json(const QuadraticForm& q) { return json{{"gram", to_json(q.gram())}}; }

QuadraticForm quadratic_form_from_json(const json& j) {
  try {
    return QuadraticForm(matrix_from_json<Rational>(j.at("gram")));
  } catch (const json::exception& ex) {
    throw ParseError(std::string("quadratic form JSON: ") + ex.what());
  }
}

json to_json(const InvariantPair& pair) {
  return json{{"q", to_json(pair.q)},
              {"q_poly", pair.q.to_poly().str()},
              {"f", to_json(pair.f.poly())},
              {"f_poly", pair.f.poly().str()},
              {"sign_exact", pair.sign_exact}};
}

json to_json(const DualTrivector& phi) { return to_json(phi.coeffs, "fijk"); }

}  // namespace pvs
