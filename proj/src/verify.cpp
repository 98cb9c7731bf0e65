#include "pvs/verify.hpp"

#include "pvs/golden.hpp"
#include "pvs/liealg.hpp"
#include "pvs/oppenheim.hpp"
#include "pvs/reptheory.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>

namespace pvs::verify {

namespace {

using Clock = std::chrono::steady_clock;
using QVec = std::vector<Rational>;

struct Result {
  Status status = Status::Pass;
  std::string detail;
  json diff;
};

Result pass(std::string detail = {}) { return {Status::Pass, std::move(detail), nullptr}; }
Result fail(std::string detail, json diff = nullptr) { return {Status::Fail, std::move(detail), std::move(diff)}; }
Result mismatch(std::string detail, json diff) { return {Status::Mismatch, std::move(detail), std::move(diff)}; }
Result expect(bool ok, std::string detail, json diff = nullptr) {
  return ok ? pass(std::move(detail)) : fail(std::move(detail), std::move(diff));
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

class Recorder {
 public:
  Recorder(std::string suite, std::vector<Outcome>& out) : suite_(std::move(suite)), out_(out) {}

  void check(const std::string& name, int criterion, const std::function<Result()>& body) {
    const auto t0 = Clock::now();
    Result r;
    try {
      r = body();
    } catch (const std::exception& ex) {
      r = fail(std::string("exception: ") + ex.what());
    }
    add(name, criterion, std::move(r), since(t0));
  }

  void add(const std::string& name, int criterion, Result r, double seconds) {
    out_.push_back({suite_, name, criterion, r.status, std::move(r.detail), std::move(r.diff), seconds});
  }

 private:
  std::string suite_;
  std::vector<Outcome>& out_;
};

json exponent_json(const Monomial& m, int arity) {
  json e = json::array();
  for (int k = 0; k < arity; ++k) e.push_back(m.e[k]);
  return e;
}

/// Term-level difference of two polynomials, at most `limit` entries.
json poly_diff(const QPoly& computed, const QPoly& expected, std::size_t limit = 40) {
  std::map<Monomial, std::pair<Rational, Rational>, GlexGreater> terms;
  for (const auto& [m, c] : computed.terms()) terms[m].first = c;
  for (const auto& [m, c] : expected.terms()) terms[m].second = c;
  json out = json::array();
  std::size_t differing = 0;
  for (const auto& [m, cs] : terms) {
    if (cs.first == cs.second) continue;
    if (++differing <= limit)
      out.push_back(json{{"exp", exponent_json(m, computed.arity())}, {"computed", to_json(cs.first)}, {"expected", to_json(cs.second)}});
  }
  return json{{"differing_terms", differing}, {"terms", out}};
}

json smatrix_diff(const SMatrix<Rational>& computed, const SMatrix<Rational>& expected) {
  json out = json::array();
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (computed(i, j) != expected(i, j))
        out.push_back(json{{"i", i + 1},
                           {"j", j + 1},
                           {"computed", SMatrix<Rational>::covector_str(computed(i, j))},
                           {"expected", SMatrix<Rational>::covector_str(expected(i, j))}});
  return out;
}

json trivector_diff(const QTrivector& computed, const QTrivector& expected) {
  json out = json::array();
  std::map<Triple, std::pair<Rational, Rational>> all;
  for (const auto& [t, c] : computed.terms()) all[t].first = c;
  for (const auto& [t, c] : expected.terms()) all[t].second = c;
  for (const auto& [t, cs] : all)
    if (!(cs.first == cs.second))
      out.push_back(json{{"ijk", {t[0], t[1], t[2]}}, {"computed", to_json(cs.first)}, {"expected", to_json(cs.second)}});
  return out;
}

template <typename K>
json matrix_diff(const Matrix<K>& computed, const Matrix<K>& expected) {
  json out = json::array();
  if (computed.rows() != expected.rows() || computed.cols() != expected.cols()) return json{{"shape", "differs"}};
  for (int i = 0; i < computed.rows(); ++i)
    for (int j = 0; j < computed.cols(); ++j)
      if (!(computed(i, j) == expected(i, j)))
        out.push_back(json{{"i", i + 1}, {"j", j + 1}, {"computed", to_json(computed(i, j))}, {"expected", to_json(expected(i, j))}});
  return out;
}

QPoly var(int i) { return QPoly::variable(kDim, i - 1); }
QVec e(int i) { return basis_vector<Rational>(i); }

CPoly to_cpoly(const QPoly& p) {
  std::vector<CPoly::Term> terms(p.terms().begin(), p.terms().end());
  return CPoly::from_terms(p.arity(), std::move(terms));
}

/// The displayed Q_{w1} (sign = +1) or Q_{w2} (sign = -1).
QPoly q_real_form_display(int sign) {
  const Rational s(sign);
  return Rational(2048) * (-var(1) * var(1) + s * var(2) * var(2) + s * var(3) * var(3) - var(4) * var(4) +
                           s * var(5) * var(5) + s * var(6) * var(6) - Rational(4) * var(7) * var(7) +
                           Rational(4) * var(7) * var(8) - Rational(4) * var(8) * var(8));
}

GroupElement<Rational> random_group_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    QMatrix g(kDim, kDim);
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) g(i, j) = Rational(d(rng));
    const int t = d(rng);
    if (t == 0 || g.det().is_zero()) continue;
    return {Rational(t), g};
  }
}

QVec random_rational_vec(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5), den(1, 3);
  QVec v(kDim);
  for (auto& c : v) c = Rational(d(rng), den(rng));
  return v;
}

std::vector<GaussianRational> random_gaussian_vec(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5), den(1, 3);
  std::vector<GaussianRational> v(kDim);
  for (auto& c : v) c = GaussianRational(Rational(d(rng), den(rng)), Rational(d(rng), den(rng)));
  return v;
}

std::optional<Rational> ratio(const QPoly& a, const QPoly& b) {
  if (a.size() != b.size() || a.is_zero()) return std::nullopt;
  const Rational c = a.leading().second / b.leading().second;
  if (!(a == b * c)) return std::nullopt;
  return c;
}

// ---------------------------------------------------------------- smatrix

void suite_smatrix(Recorder& rec, const Options& opt) {
  bool certificate = false;
  rec.check("S covariance certificate on seeded transports", 1, [&] {
    std::mt19937_64 rng(opt.seed);
    const QTrivector w = builtin_w();
    const auto sw = s_matrix(w);
    for (int k = 0; k < 2; ++k) {
      const auto el = random_group_element(rng);
      if (!(s_matrix(act(el, w)).to_poly_matrix() == transported_s(el, sw)))
        return fail("S_{gx} differs from t^3 det(g) g S_x(g^-1 v) g^T");
    }
    certificate = true;
    return pass("2 transports");
  });
  for (const std::string name : {"w", "wprime"}) {
    rec.check("S_" + name + " matches the reference matrix", 1, [&] {
      const auto computed = s_matrix(builtin_trivector(name));
      const auto expected = golden_s_matrix(name);
      const json diff = smatrix_diff(computed, expected);
      if (diff.empty()) return pass("64/64 covector entries agree");
      const std::string kind = certificate ? "golden suspected misprint (covariance certificate passes)"
                                           : "computation differs from golden";
      return mismatch(std::to_string(diff.size()) + " of 64 entries differ; " + kind, diff);
    });
  }
}

// ---------------------------------------------------------- factorization

void suite_factorization(Recorder& rec, const Options& opt) {
  const Rational c(kFactorConstant);
  struct Printed {
    std::string name;
    QTrivector x;
    QPoly q, f;
  };
  const std::vector<Printed> printed = {{"w", builtin_w(), q_w_poly(), f_w_poly()},
                                        {"wprime", builtin_wprime(), q_wprime_poly(), f_wprime_poly()}};
  for (const auto& pr : printed) {
    rec.check("P_" + pr.name + " = -1458 Q F^2 with the printed Q, F", 2, [&] {
      const QPoly p = p_poly(pr.x);
      const QPoly rhs = -c * pr.q * pr.f * pr.f;
      if (p == rhs) return pass("exact identity holds");
      std::string detail = "P differs from -1458 Q F^2";
      if (p == c * pr.q * pr.f * pr.f) detail += "; P = +1458 Q F^2 holds exactly (sign conflict with the printed S matrix)";
      return mismatch(detail, poly_diff(p, rhs));
    });
  }
  rec.check("factor_invariants(w, identity transport) = (Q_w, F_w)", 2, [] {
    const auto pair = factor_invariants(builtin_w(), GroupElement<Rational>::identity());
    if (!(pair.q.to_poly() == q_w_poly())) return mismatch("Q differs", poly_diff(pair.q.to_poly(), q_w_poly()));
    if (!(pair.f.poly() == f_w_poly())) return mismatch("F differs", poly_diff(pair.f.poly(), f_w_poly()));
    return pass("P_w = +1458 Q_w F_w^2 with the printed pair");
  });
  rec.check("factor_invariants(wprime) = (-Q_w', -F_w') under P = +1458 Q F^2", 2, [] {
    const auto pair = factor_invariants(builtin_wprime());
    const QPoly q = -q_wprime_poly(), f = -f_wprime_poly();
    if (!(pair.q.to_poly() == q)) return mismatch("Q differs", poly_diff(pair.q.to_poly(), q));
    if (!(pair.f.poly() == f)) return mismatch("F differs", poly_diff(pair.f.poly(), f));
    return pass("normalized F is primitive with positive leading coefficient");
  });

  // Covariance on seeded transports.
  std::mt19937_64 rng(opt.seed);
  const QTrivector w = builtin_w();
  const auto sw = s_matrix(w);
  const QPoly pw = p_poly(w);
  const DualTrivector phi_w = phi_w_reference();
  struct Tally {
    int bad = 0;
    double seconds = 0;
    std::string first;
  };
  Tally ts, tp, tqf, tphi, tplain;
  auto timed = [](Tally& t, int sample, const std::function<bool()>& body) {
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception&) {
      ok = false;
    }
    t.seconds += since(t0);
    if (!ok && t.bad++ == 0) t.first = "first failure at sample " + std::to_string(sample);
  };
  for (int k = 0; k < opt.covariance_samples; ++k) {
    const auto el = random_group_element(rng);
    const QTrivector x = act(el, w);
    const Rational d = el.g.det();
    const QMatrix ginv = el.g.inverse();
    timed(ts, k, [&] { return s_matrix(x).to_poly_matrix() == transported_s(el, sw); });
    std::optional<InvariantPair> pair;
    timed(tqf, k, [&] {
      pair = factor_invariants(x, el);
      return pair->sign_exact && pair->q.to_poly() == pow(el.t, 10) * pow(d, 4) * linear_substitute(q_w_poly(), ginv) &&
             pair->f.poly() == pow(el.t, 7) * pow(d, 3) * linear_substitute(f_w_poly(), ginv);
    });
    timed(tp, k, [&] { return pair && pair->p == pow(el.t, 24) * pow(d, 10) * linear_substitute(pw, ginv); });
    timed(tphi, k, [&] {
      if (!pair) return false;
      const DualTrivector px = phi_from_gram(x, pair->q.gram());
      const auto contragredient = GroupElement<Rational>(Rational(1), ginv.transpose());
      return px.coeffs == pow(el.t, 31) * pow(d, 12) * act(contragredient, phi_w.coeffs);
    });
    if (opt.covariance_untransported)
      timed(tplain, k, [&] {
        if (!pair) return false;
        const auto plain = factor_invariants(x);
        const auto rq = ratio(plain.q.to_poly(), pair->q.to_poly());
        const auto rf = ratio(plain.f.poly(), pair->f.poly());
        return rq && rf && *rq * *rf * *rf == Rational(1);
      });
  }
  const std::string n = std::to_string(opt.covariance_samples) + " samples";
  auto report = [&](const std::string& name, const Tally& t) {
    rec.add(name, 3, t.bad == 0 ? pass(n) : fail(std::to_string(t.bad) + "/" + n + " failed; " + t.first), t.seconds);
  };
  report("S covariance: S_{gx}(v) = t^3 det(g) g S_x(g^-1 v) g^T", ts);
  report("P covariance: P_{gx}(v) = t^24 det(g)^10 P_x(g^-1 v)", tp);
  report("Q, F covariance with transport: t^10 det^4 Q_w(g^-1 v), t^7 det^3 F_w(g^-1 v)", tqf);
  report("Phi covariance: Phi_{gx} = t^31 det^12 (g^-T) Phi_w", tphi);
  if (opt.covariance_untransported) report("F without transport: (Q, F) up to (l^2 Q, F / l)", tplain);
}

// -------------------------------------------------------------------- phi

void suite_phi(Recorder& rec, const Options&) {
  rec.check("phi(w) equals the reference dual trivector", 4, [] {
    const DualTrivector p = phi(builtin_w(), GroupElement<GaussianRational>::identity());
    const json diff = trivector_diff(p.coeffs, phi_w_reference().coeffs);
    return diff.empty() ? pass("8 terms") : mismatch("coefficients differ", diff);
  });
  rec.check("Phi_w(e1, e2, e3) = -1", 4, [] {
    const Rational v = phi(builtin_w(), GroupElement<GaussianRational>::identity())(1, 2, 3);
    return expect(v == Rational(-1), "value " + v.str());
  });
}

// ----------------------------------------------------------------- liealg

void suite_liealg(Recorder& rec, const Options& opt) {
  std::mt19937_64 rng(opt.seed + 5);
  rec.check("ad(v) v' = [v, v'] on basis pairs and random inputs", 5, [&] {
    int bad = 0;
    for (int i = 1; i <= 8; ++i)
      for (int j = 1; j <= 8; ++j)
        if (!(ad_matrix(e(i)) * e(j) == bracket(e(i), e(j)))) ++bad;
    for (int k = 0; k < opt.random_inputs; ++k) {
      const QVec a = random_rational_vec(rng), b = random_rational_vec(rng);
      if (!(ad_matrix(a) * b == bracket(a, b))) ++bad;
      const QMatrix A = ad_matrix(a), B = ad_matrix(b);
      if (!(ad_matrix(bracket(a, b)) == A * B - B * A)) ++bad;
    }
    return expect(bad == 0, std::to_string(bad) + " failures");
  });
  rec.check("ad(v) matches the A(alpha, beta, gamma) table", 5, [&] {
    for (int k = 0; k < opt.random_inputs; ++k) {
      const QVec v = random_rational_vec(rng);
      const QMatrix a = ad_matrix(v), t = golden_ad_table(v);
      if (!(a == t)) return mismatch("table differs at a random input", matrix_diff(a, t));
    }
    return pass(std::to_string(opt.random_inputs) + " random inputs");
  });
  rec.check("Killing Gram = 6 Gram(Q_w)", 5, [] {
    QMatrix b(8, 8);
    for (int i = 1; i <= 8; ++i)
      for (int j = 1; j <= 8; ++j) b(i - 1, j - 1) = killing_B(e(i), e(j));
    const QMatrix expected = Rational(6) * QuadraticForm::from_poly(q_w_poly()).gram();
    return b == expected ? pass("64 entries") : mismatch("Gram differs", matrix_diff(b, expected));
  });
  rec.check("C(e1, e2, e3) = -6", 5, [] {
    const Rational v = trilinear_C(e(1), e(2), e(3));
    return expect(v == Rational(-6), "value " + v.str());
  });
  rec.check("C = 6 Phi_w on all 56 sorted basis triples", 5, [] {
    const DualTrivector phi_w = phi_w_reference();
    json diff = json::array();
    for (int i = 1; i <= 8; ++i)
      for (int j = i + 1; j <= 8; ++j)
        for (int k = j + 1; k <= 8; ++k) {
          const Rational c = trilinear_C(e(i), e(j), e(k)), p = Rational(6) * phi_w(i, j, k);
          if (!(c == p)) diff.push_back(json{{"ijk", {i, j, k}}, {"C", to_json(c)}, {"6Phi", to_json(p)}});
        }
    return diff.empty() ? pass("56/56") : mismatch("triples differ", diff);
  });
  rec.check("q conj(ad z) q^-1 = ad(p_H(z)) on random Gaussian inputs", 5, [&] {
    int bad = 0;
    for (int i : {1, 2}) {
      const RealFormTransport rf = real_form(i);
      const CMatrix q = CMatrix::from(rf.q);
      const CMatrix qinv = q.inverse();
      for (int k = 0; k < opt.random_inputs; ++k) {
        const auto z = random_gaussian_vec(rng);
        std::vector<GaussianRational> zbar(kDim);
        for (int m = 0; m < kDim; ++m) zbar[m] = z[m].conj();
        if (!(q * ad_matrix(zbar) * qinv == ad_matrix(matrix_to_coords(p_h(rf.h_form, coords_to_matrix(z)))))) ++bad;
      }
    }
    return expect(bad == 0, std::to_string(2 * opt.random_inputs) + " inputs, " + std::to_string(bad) + " failures");
  });
}

// -------------------------------------------------------------- realforms

void suite_realforms(Recorder& rec, const Options& opt) {
  std::mt19937_64 rng(opt.seed + 6);
  std::map<int, QPoly> q_of;
  for (int i : {1, 2}) {
    const std::string tag = " (i = " + std::to_string(i) + ")";
    std::optional<RealFormTransport> rf;
    rec.check("real form structure" + tag, 6, [&] {
      rf = real_form(i);
      const bool sq = rf->q * rf->q == QMatrix::identity(8);
      const bool conj = rf->h.inverse() * rf->h.conj() == CMatrix::from(rf->q);
      const bool det = rf->h.det() == GaussianRational(Rational(0), Rational(-8));
      return expect(sq && conj && det, std::string("q^2 = I: ") + (sq ? "yes" : "no") + ", q = h^-1 conj h: " +
                                           (conj ? "yes" : "no") + ", det h = -8i: " + (det ? "yes" : "no"));
    });
    if (!rf) continue;
    rec.check("w_" + std::to_string(i) + " = h w matches the reference" + tag, 6, [&] {
      const QTrivector expected = i == 1 ? builtin_w1() : builtin_w2();
      const json diff = trivector_diff(rf->w_i, expected);
      return diff.empty() ? pass() : mismatch("coefficients differ", diff);
    });
    std::optional<InvariantPair> pair;
    rec.check("Q_{w_" + std::to_string(i) + "} from factor_invariants equals the display" + tag, 6, [&] {
      pair = factor_invariants(rf->w_i, builtin_transport(i == 1 ? "w1" : "w2"));
      const QPoly q = pair->q.to_poly();
      q_of[i] = q;
      const CPoly derived = GaussianRational(4096) * linear_substitute(to_cpoly(q_w_poly()), rf->h.inverse());
      if (!(to_cpoly(q) == derived)) return fail("Q differs from 2^12 Q_w(h^-1 v)");
      const QPoly display = q_real_form_display(i == 1 ? 1 : -1);
      if (!(q == display)) return mismatch("derived Q differs from the display", poly_diff(q, display));
      return pass("derived 2^12 Q_w(h^-1 v) agrees with the display");
    });
    if (!pair) continue;
    rec.check("F_{w_" + std::to_string(i) + "} = 2^9 sqrt(-1) F_w(h^-1 v)" + tag, 6, [&] {
      const CPoly derived =
          GaussianRational(512) * GaussianRational::i() * linear_substitute(to_cpoly(f_w_poly()), rf->h.inverse());
      return expect(to_cpoly(pair->f.poly()) == derived, "exact over Q(i)");
    });
    rec.check("Q_{w_" + std::to_string(i) + "}(v) = 2^12 tr X^2, F_{w_" + std::to_string(i) + "}(v) = 2^9 sqrt(-1) det X for X in su(H_i)" + tag, 6, [&] {
      int bad = 0;
      for (int k = 0; k < opt.random_inputs; ++k) {
        const QVec v = random_rational_vec(rng);
        const CMatrix x = to_su(i, v);
        if (!su_check(rf->h_form, x)) ++bad;
        if (!(GaussianRational(pair->q.to_poly().eval(v)) == GaussianRational(4096) * (x * x).trace())) ++bad;
        if (!(GaussianRational(pair->f.poly().eval(v)) == GaussianRational(512) * GaussianRational::i() * x.det()))
          ++bad;
      }
      return expect(bad == 0, std::to_string(opt.random_inputs) + " random rational v, " + std::to_string(bad) + " failures");
    });
  }
  rec.check("signatures (5,3), (4,4), (0,8) for Q_w, Q_{w1}, Q_{w2}", 6, [&] {
    if (!q_of.count(1) || !q_of.count(2)) return fail("real-form invariants unavailable");
    const auto s0 = signature(QuadraticForm::from_poly(q_w_poly()));
    const auto s1 = signature(QuadraticForm::from_poly(q_of[1]));
    const auto s2 = signature(QuadraticForm::from_poly(q_of[2]));
    const json got = {{s0.first, s0.second}, {s1.first, s1.second}, {s2.first, s2.second}};
    const bool ok = s0 == std::pair{5, 3} && s1 == std::pair{4, 4} && s2 == std::pair{0, 8};
    return ok ? pass(got.dump()) : mismatch("signatures differ", json{{"computed", got}});
  });
}

// -------------------------------------------------------------- reptheory

void suite_reptheory(Recorder& rec, const Options&) {
  using namespace rep;
  const RootSystem a2 = root_system('A', 2), a3 = root_system('A', 3);
  rec.check("A2: (1,1) x (1,1) = (0,0) + 2(1,1) + (3,0) + (0,3) + (2,2)", 7, [&] {
    const DecompList d = tensor_decompose(a2, {1, 1}, {1, 1});
    const DecompList expected = {{{0, 0}, 1}, {{1, 1}, 2}, {{3, 0}, 1}, {{0, 3}, 1}, {{2, 2}, 1}};
    return d == expected ? pass() : mismatch("decomposition differs", json{{"computed", rep::to_json(d)}});
  });
  rec.check("dimensions 8, 10, 10, 27 of the summands", 7, [&] {
    const std::vector<std::int64_t> got = {weyl_dim(a2, {1, 1}), weyl_dim(a2, {3, 0}), weyl_dim(a2, {0, 3}),
                                           weyl_dim(a2, {2, 2})};
    return expect(got == std::vector<std::int64_t>{8, 10, 10, 27}, json(got).dump());
  });
  rec.check("alternating cube of the adjoint: trivial multiplicity 1, dimension 56", 7, [&] {
    const DecompList d = alt3_decompose(a2, {1, 1});
    std::int64_t total = 0;
    for (const auto& [w, m] : d) total += m * weyl_dim(a2, w);
    const auto it = d.find(Weight{0, 0});
    const std::int64_t trivial = it == d.end() ? 0 : it->second;
    return expect(trivial == 1 && total == 56, "computed " + rep::to_json(d).dump());
  });
  rec.check("A3 dimension list", 7, [&] {
    const std::vector<std::pair<Weight, std::int64_t>> cases = {
        {{2, 0, 0}, 10}, {{0, 0, 2}, 10}, {{1, 0, 1}, 15}, {{1, 1, 0}, 20}, {{0, 1, 1}, 20},
        {{0, 2, 0}, 20}, {{1, 0, 0}, 4},  {{0, 0, 1}, 4},  {{0, 1, 0}, 6}};
    json diff = json::array();
    for (const auto& [w, d] : cases)
      if (weyl_dim(a3, w) != d) diff.push_back(json{{"weight", w}, {"computed", weyl_dim(a3, w)}, {"expected", d}});
    return diff.empty() ? pass("9 weights") : mismatch("dimensions differ", diff);
  });
  const auto rows = table45(8);
  rec.check("algebra dimensions for all nine table rows", 7, [&] {
    json diff = json::array();
    int n = 0;
    for (const auto& row : rows)
      for (const auto& e : row.entries) {
        ++n;
        if (e.algebra_dim != e.expected_algebra_dim)
          diff.push_back(json{{"algebra", e.algebra}, {"computed", e.algebra_dim}, {"expected", e.expected_algebra_dim}});
      }
    return diff.empty() ? pass(std::to_string(n) + " algebras") : mismatch("dimensions differ", diff);
  });
  rec.check("smallest representations G2 7, F4 26, E6 27, E7 56; E8 248 and 3875", 7, [&] {
    json diff = json::array();
    json seen = json::object();
    for (const auto& row : rows)
      for (const auto& e : row.entries) {
        if (row.type == 'E' && e.rank == 8) {
          const bool has3875 =
              std::find(e.fundamental_dims.begin(), e.fundamental_dims.end(), 3875) != e.fundamental_dims.end();
          seen["E8"] = e.fundamental_dims;
          if (e.smallest_rep != 248 || !has3875) diff.push_back(json{{"algebra", "E8"}, {"fundamental_dims", e.fundamental_dims}});
          continue;
        }
        if (e.smallest_rep != e.expected_rep)
          diff.push_back(json{{"algebra", e.algebra}, {"computed", e.smallest_rep}, {"expected", e.expected_rep}});
        if (row.type > 'D') seen[e.algebra] = e.smallest_rep;
      }
    return diff.empty() ? pass(seen.dump() + "; no minimality claim for E8") : mismatch("representation dimensions differ", diff);
  });
  rec.check("irreps_of_dim(A3, 8) = {} and irreps_of_dim(A2, 8) = {(1,1)}", 7, [&] {
    const auto x = irreps_of_dim(a3, 8), y = irreps_of_dim(a2, 8);
    return expect(x.empty() && y == std::vector<Weight>{{1, 1}}, "A3: " + json(x).dump() + ", A2: " + json(y).dump());
  });
  rec.check("characters: Weyl symmetry and total dimension", 0, [&] {
    int bad = 0;
    for (const char* name : {"A2", "B2", "G2", "A3", "D4"}) {
      const RootSystem rs = root_system(name);
      for (int i = 1; i <= rs.rank; ++i) {
        Weight lam = rs.fundamental(i);
        lam[rs.rank - 1] += 1;
        const Character ch = irr_character(rs, lam);
        if (character_dim(ch) != weyl_dim(rs, lam)) ++bad;
        for (int s = 1; s <= rs.rank; ++s)
          for (const auto& [w, m] : ch) {
            auto it = ch.find(rs.reflect(w, s));
            if (it == ch.end() || it->second != m) ++bad;
          }
      }
    }
    return expect(bad == 0, std::to_string(bad) + " failures");
  });
  rec.check("screening of candidate dimensions against simple algebras", 0, [] {
    json hits = json::array();
    for (const auto& h : screen_candidates()) hits.push_back(to_json(h));
    return pass(hits.dump());
  });
}

// -------------------------------------------------------------- oppenheim

void suite_oppenheim(Recorder& rec, const Options& opt) {
  using namespace lab;
  rec.check("construct_h reaches r in {1, -1, 5, -5, 100} within 1e-9 max(1, |r|)", 8, [] {
    json got = json::array();
    bool ok = true;
    for (double r : {1.0, -1.0, 5.0, -5.0, 100.0}) {
      const ConstructedH c = construct_h(r);
      const bool hit = std::abs(c.achieved - r) <= 1e-9 * std::max(1.0, std::abs(r));
      ok = ok && hit;
      got.push_back(json{{"r", r}, {"residual", c.residual}});
    }
    return expect(ok, got.dump());
  });
  rec.check("i = 0, g = I scans give integer F-values only", 8, [&] {
    ScanConfig cfg;
    cfg.i = 0;
    cfg.cap = static_cast<std::size_t>(-1);
    std::uint64_t checked = 0, bad = 0;
    for (int pass_no = 0; pass_no < 2; ++pass_no) {
      if (pass_no == 0) {
        cfg.enumeration = {2, Mode::Exhaustive, 0, 0};
        cfg.a = -10.5;
        cfg.b = 10.5;
      } else {
        cfg.enumeration = {12, Mode::Sample, 20000, opt.seed};
        cfg.a = -1e6;
        cfg.b = 1e6;
      }
      const ScanReport r = scan(cfg);
      for (double f : r.values) {
        ++checked;
        if (f != std::round(f)) ++bad;
      }
      if (pass_no == 0 && (!r.max_gap || *r.max_gap < 1.0)) ++bad;
    }
    return expect(bad == 0, std::to_string(checked) + " values checked, " + std::to_string(bad) + " non-integral");
  });
  for (int i : {0, 1}) {
    const std::string label = i == 0 ? "i = 0: q = Q_w(v), f = F_w(v)" : "i = 1: q = 2^-12 Q_{w1}(v), f = 2^-9 F_{w1}(v)";
    rec.check("exact-layer agreement to 1e-12 on random integer vectors, " + label, 8, [&, i] {
      std::mt19937_64 rng(opt.seed + 8 + i);
      std::uniform_int_distribution<int> d(-20, 20);
      const int n = opt.oracle_vectors;
      const auto tables = form_tables(i, RealLinearMap::identity());
      std::vector<double> soa(8 * n), q(n), f(n);
      std::vector<IntVec> vs(n);
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < 8; ++k) vs[j][k] = d(rng);
        for (int k = 0; k < 8; ++k) soa[k * n + j] = vs[j][k];
      }
      kernels::function(kernels::select())(tables, soa.data(), n, q.data(), f.data());
      double worst = 0;
      for (int j = 0; j < n; ++j) {
        const auto [eq, ef] = exact_form_values(i, vs[j]);
        const FormValues fv = form_values(i, RealLinearMap::identity(), vs[j]);
        for (auto [a, b] : {std::pair{fv.q, eq}, {fv.f, ef}, {q[j], eq}, {f[j], ef}}) {
          const double bd = b.to_double();
          worst = std::max(worst, std::abs(a - bd) / std::max(1.0, std::abs(bd)));
        }
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "worst relative error %.3g", worst);
      return expect(worst <= 1e-12, std::to_string(n) + " vectors; " + buf);
    });
  }
  for (int i : {0, 1}) {
    rec.check("max gap in [-10, 10] shrinks over N = 1, 2, 3 for a seeded irrational g (i = " + std::to_string(i) + ")", 8,
              [&, i] {
                ScanConfig cfg;
                cfg.i = i;
                cfg.g = RealLinearMap::near_identity(opt.seed);
                cfg.a = -10;
                cfg.b = 10;
                cfg.cap = 0;
                std::vector<double> gaps;
                for (int n = 1; n <= 3; ++n) {
                  cfg.enumeration = {n, Mode::Exhaustive, 0, 0};
                  const ScanReport r = scan(cfg);
                  if (!r.max_gap) return fail("gap undefined at N = " + std::to_string(n));
                  gaps.push_back(*r.max_gap);
                }
                const bool ok = gaps[1] <= gaps[0] && gaps[2] <= gaps[1] && gaps[2] < gaps[0];
                return expect(ok, "gaps " + json(gaps).dump());
              });
  }
  rec.check("batch kernels agree bit for bit", 8, [&] {
    ScanConfig cfg;
    cfg.i = 1;
    cfg.g = RealLinearMap::near_identity(opt.seed + 1);
    cfg.enumeration = {8, Mode::Sample, 5001, opt.seed};
    cfg.kernel = kernels::Kind::Scalar;
    const ScanReport base = scan(cfg);
    std::string names = "scalar";
    for (kernels::Kind k : kernels::available_kinds()) {
      if (k == kernels::Kind::Scalar) continue;
      cfg.kernel = k;
      const ScanReport r = scan(cfg);
      if (r.values != base.values || r.min_abs_q != base.min_abs_q) return fail(std::string(kernels::name(k)) + " differs from scalar");
      names += std::string(", ") + kernels::name(k);
    }
    return pass(names);
  });
  rec.check("rationality heuristic examples", 0, [] {
    const auto id = rationality_report(0, RealLinearMap::identity());
    Mat8 m = Mat8::Identity();
    m(0, 0) = std::pow(2.0, 0.25);
    const auto irr = rationality_report(0, RealLinearMap(m));
    return expect(id.rational && id.common_denominator == 1 && !irr.rational,
                  "identity: " + id.verdict + ", diag(2^(1/4), 1, ...): " + irr.verdict);
  });
}

using SuiteFn = void (*)(Recorder&, const Options&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s = {
      {"smatrix", &suite_smatrix},   {"factorization", &suite_factorization}, {"phi", &suite_phi},
      {"liealg", &suite_liealg},     {"realforms", &suite_realforms},         {"reptheory", &suite_reptheory},
      {"oppenheim", &suite_oppenheim}};
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<Outcome> run(const std::string& suite, const Options& opt) {
  std::vector<Outcome> out;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    Recorder rec(name, out);
    fn(rec, opt);
  }
  if (!found) throw UnknownSuite("unknown verification suite '" + suite + "'");
  return out;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Mismatch: return "mismatch";
  }
  return "?";
}

bool all_pass(const std::vector<Outcome>& outcomes) {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const Outcome& o) { return o.status == Status::Pass; });
}

json to_json(const Outcome& o) {
  json j = {{"suite", o.suite}, {"check", o.name}, {"criterion", o.criterion}, {"status", status_name(o.status)}, {"detail", o.detail}};
  if (!o.diff.is_null()) j["diff"] = o.diff;
  return j;
}

}  // namespace pvs::verify
