#include <doctest.h>

#include "pvs/oppenheim.hpp"

#include <cmath>
#include <cstdlib>
#include <random>

using namespace pvs;
using namespace pvs::lab;

namespace {

IntVec iv(std::initializer_list<int> xs) {
  IntVec v{};
  std::copy(xs.begin(), xs.end(), v.begin());
  return v;
}

bool close(double a, const Rational& exact, double rel) {
  const double b = exact.to_double();
  return std::abs(a - b) <= rel * std::max(1.0, std::abs(b));
}

int mobius(int d) {
  int m = 1;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    d /= p;
    if (d % p == 0) return 0;
    m = -m;
  }
  return d > 1 ? -m : m;
}

/// Primitive vectors in the box by Mobius inversion over the common divisor.
std::uint64_t mobius_count(int n) {
  std::int64_t total = 0;
  for (int d = 1; d <= n; ++d) {
    std::int64_t side = 2 * (n / d) + 1, box = 1;
    for (int k = 0; k < 8; ++k) box *= side;
    total += mobius(d) * (box - 1);
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace

TEST_CASE("form values") {
  const auto g = RealLinearMap::identity();
  const FormValues a = form_values(0, g, iv({1, 1, 1}));
  CHECK(a.q == 0.0);
  CHECK(a.f == -1.0);
  const FormValues b = form_values(0, g, iv({0, 0, 0, 0, 0, 0, 1, 0}));
  CHECK(b.q == 2.0);
  CHECK(b.f == 0.0);
  CHECK_THROWS(form_values(2, g, iv({1})));
}

TEST_CASE("exact-layer cross-check") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  const auto g = RealLinearMap::identity();
  for (int i : {0, 1}) {
    const auto tables = form_tables(i, g);
    int bad = 0;
    std::vector<double> soa(8 * 200), q(200), f(200);
    std::vector<std::pair<Rational, Rational>> exact;
    for (int j = 0; j < 200; ++j) {
      IntVec v;
      for (int& c : v) c = d(rng);
      const auto ex = exact_form_values(i, v);
      const FormValues fv = form_values(i, g, v);
      if (!close(fv.q, ex.first, 1e-12) || !close(fv.f, ex.second, 1e-12)) ++bad;
      for (int k = 0; k < 8; ++k) soa[k * 200 + j] = v[k];
      exact.push_back(ex);
    }
    kernels::eval_scalar(tables, soa.data(), 200, q.data(), f.data());
    for (int j = 0; j < 200; ++j)
      if (!close(q[j], exact[j].first, 1e-12) || !close(f[j], exact[j].second, 1e-12)) ++bad;
    CHECK(bad == 0);
  }
  // Cubic homogeneity of the exact values.
  const auto one = exact_form_values(1, iv({1, 0, 2, 0, -1, 0, 1, 0}));
  const auto two = exact_form_values(1, iv({2, 0, 4, 0, -2, 0, 2, 0}));
  CHECK(two.second == Rational(8) * one.second);
  CHECK(two.first == Rational(4) * one.first);
}

TEST_CASE("kernels agree bit for bit") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> d(-3, 3);
  const auto g = RealLinearMap::near_identity(5, 0.1);
  for (int i : {0, 1}) {
    const auto tables = form_tables(i, g);
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 33u, 1000u}) {
      std::vector<double> soa(8 * n);
      for (auto& x : soa) x = d(rng);
      std::vector<double> q0(n), f0(n);
      kernels::eval_scalar(tables, soa.data(), n, q0.data(), f0.data());
      for (kernels::Kind k : kernels::available_kinds()) {
        CAPTURE(kernels::name(k));
        std::vector<double> q(n), f(n);
        kernels::function(k)(tables, soa.data(), n, q.data(), f.data());
        CHECK(q == q0);
        CHECK(f == f0);
      }
    }
  }
  CHECK(kernels::available(kernels::Kind::Scalar));
  CHECK(kernels::parse_kind("avx2") == kernels::Kind::Avx2);
  CHECK_THROWS(kernels::parse_kind("sse9"));
}

TEST_CASE("kernel override") {
  const char* old = std::getenv("PVS_KERNEL");
  const std::string saved = old ? old : "";
  setenv("PVS_KERNEL", "scalar", 1);
  CHECK(kernels::select() == kernels::Kind::Scalar);
  setenv("PVS_KERNEL", "bogus", 1);
  CHECK_THROWS(kernels::select());
  if (old)
    setenv("PVS_KERNEL", saved.c_str(), 1);
  else
    unsetenv("PVS_KERNEL");
}

TEST_CASE("primitive vectors") {
  CHECK(primitive_vectors({1, Mode::Exhaustive, 0, 0}).size() == 6560);
  CHECK_FALSE(is_primitive(iv({2, 4, 6})));
  CHECK_FALSE(is_primitive(IntVec{}));
  CHECK(is_primitive(iv({2, 3})));
  for (int n = 1; n <= 3; ++n) CHECK(primitive_count(n) == mobius_count(n));
  const auto s1 = primitive_vectors({5, Mode::Sample, 100, 9});
  const auto s2 = primitive_vectors({5, Mode::Sample, 100, 9});
  const auto s3 = primitive_vectors({5, Mode::Sample, 100, 10});
  CHECK(s1 == s2);
  CHECK(s1 != s3);
  for (const auto& v : s1) {
    CHECK(is_primitive(v));
    for (int c : v) CHECK(std::abs(c) <= 5);
  }
  CHECK_THROWS(primitive_vectors({4, Mode::Exhaustive, 0, 0}));
}

TEST_CASE("integer scan") {
  ScanConfig cfg;
  cfg.i = 0;
  cfg.enumeration = {2, Mode::Exhaustive, 0, 0};
  cfg.a = -10.5;
  cfg.b = 10.5;
  const ScanReport r = scan(cfg);
  CHECK(r.count == primitive_count(2));
  CHECK(r.values.size() + r.spill == r.in_window);
  REQUIRE(r.max_gap);
  CHECK(*r.max_gap >= 1.0);
  bool integral = true;
  for (double f : r.values) integral = integral && f == std::round(f);
  CHECK(integral);
  std::uint64_t hist = 0;
  for (auto c : r.bin_counts) hist += c;
  CHECK(hist == r.in_window);
  CHECK(*r.min_abs_q == 0.0);
  CHECK(*r.min_abs_f_nonzero == 1.0);
}

TEST_CASE("empty window") {
  ScanConfig cfg;
  cfg.enumeration = {1, Mode::Exhaustive, 0, 0};
  cfg.a = 0.25;
  cfg.b = 0.5;
  const ScanReport r = scan(cfg);
  CHECK(r.values.empty());
  CHECK_FALSE(r.max_gap);
  CHECK(to_json(r)["gap_defined"] == false);
  cfg.b = cfg.a;
  CHECK_THROWS(scan(cfg));
}

TEST_CASE("scan determinism across threads, kernels and caps") {
  ScanConfig cfg;
  cfg.i = 1;
  cfg.g = RealLinearMap::near_identity(3);
  cfg.enumeration = {6, Mode::Sample, 20000, 4};
  cfg.threads = 1;
  cfg.kernel = kernels::Kind::Scalar;
  const ScanReport base = scan(cfg);
  for (int t : {2, 3, 7}) {
    for (kernels::Kind k : kernels::available_kinds()) {
      cfg.threads = t;
      cfg.kernel = k;
      const ScanReport r = scan(cfg);
      CHECK(r.values == base.values);
      CHECK(r.max_gap == base.max_gap);
      CHECK(r.bin_counts == base.bin_counts);
      CHECK(r.min_abs_q == base.min_abs_q);
      CHECK(r.min_abs_f_nonzero == base.min_abs_f_nonzero);
    }
  }
  cfg.cap = 10;
  const ScanReport capped = scan(cfg);
  CHECK(capped.values.size() == 10);
  CHECK(capped.spill == base.in_window - 10);
  CHECK(capped.max_gap == base.max_gap);
}

TEST_CASE("h constructor") {
  const LatticeBasis basis = LatticeBasis::standard();
  const double s = exact_form_values(1, basis.columns()[0]).second.to_double();
  REQUIRE(s != 0.0);

  const ConstructedH fixed = construct_h(s, basis);
  CHECK(fixed.t == doctest::Approx(1.0));
  CHECK((fixed.h.matrix() - Mat8::Identity()).norm() < 1e-12);

  const ConstructedH eight = construct_h(8 * s, basis);
  CHECK(eight.t == doctest::Approx(2.0));
  CHECK(eight.achieved == doctest::Approx(8 * s));

  for (double r : {1.0, -1.0, 5.0, -5.0, 100.0}) {
    const ConstructedH c = construct_h(r, basis);
    CHECK(std::abs(c.achieved - r) <= 1e-9 * std::max(1.0, std::abs(r)));
    CHECK(c.h.matrix().determinant() == doctest::Approx(1.0));
  }
  const ConstructedH scaled = construct_h(128.0, basis, 2.0);
  CHECK(scaled.target == doctest::Approx(1.0));

  CHECK_THROWS_AS(construct_h(0.0, basis), ZeroTarget);
  std::array<IntVec, 8> unit{};
  for (int k = 0; k < 8; ++k) unit[k][k] = 1;
  CHECK_THROWS_AS(construct_h(1.0, LatticeBasis(unit), 1.0, 0), NoAnchorVector);
  unit[0][0] = 2;
  CHECK_THROWS(LatticeBasis{unit});
}

TEST_CASE("rationality heuristic") {
  const RationalityReport id = rationality_report(0, RealLinearMap::identity());
  CHECK(id.rational);
  CHECK(id.common_denominator == 1);

  Mat8 m = Mat8::Identity();
  m(0, 1) = 1.0 / 7;
  m(2, 2) = 5.0 / 3;
  m(7, 3) = -2.0 / 9;
  const RationalityReport rat = rationality_report(1, RealLinearMap(m));
  CHECK(rat.rational);
  CHECK(rat.common_denominator > 1);

  Mat8 irr = Mat8::Identity();
  irr(0, 0) = std::pow(2.0, 0.25);
  const RationalityReport no = rationality_report(0, RealLinearMap(irr));
  CHECK_FALSE(no.rational);
  CHECK(no.verdict == "no rational model within bound");

  CHECK(rational_approx(0.75, 100, 1e-14) == std::pair<std::int64_t, std::int64_t>{3, 4});
  CHECK(rational_approx(-1.0 / 3, 100, 1e-14) == std::pair<std::int64_t, std::int64_t>{-1, 3});
  CHECK_FALSE(rational_approx(std::sqrt(2.0), 1000000, 1e-14));
}

TEST_CASE("lab JSON") {
  const auto g = RealLinearMap::near_identity(1);
  const json j = to_json(g);
  CHECK(real_map_from_json(j).matrix() == g.matrix());
  json rat = json::array();
  for (int r = 0; r < 8; ++r) {
    json row = json::array();
    for (int c = 0; c < 8; ++c) row.push_back(r == c ? json("1/2") : json(0));
    rat.push_back(row);
  }
  CHECK(real_map_from_json(rat)(3, 3) == 0.5);
  CHECK_THROWS_AS(real_map_from_json(json::array()), ParseError);
  CHECK_THROWS(real_map_from_json(json{{"g", json::array({json::array({0, 0, 0, 0, 0, 0, 0, 0})})}}));
  CHECK(g.condition() >= 1.0);
}
