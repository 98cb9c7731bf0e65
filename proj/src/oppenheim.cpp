#include "pvs/oppenheim.hpp"

#include "pvs/liealg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>
#include <random>
#include <thread>

namespace pvs::lab {

namespace {

using cd = std::complex<double>;

void require_form_index(int i) {
  if (i != 0 && i != 1) throw Error("form index must be 0 or 1");
}

/// h_{D1}^-1 in double precision.
const std::array<std::array<cd, 8>, 8>& hinv1() {
  static const auto m = [] {
    const CMatrix h = real_form(1).h.inverse();
    std::array<std::array<cd, 8>, 8> out{};
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) out[r][c] = {h(r, c).re().to_double(), h(r, c).im().to_double()};
    return out;
  }();
  return m;
}

template <typename T>
std::array<std::array<T, 3>, 3> coords_matrix(const std::array<T, 8>& v) {
  std::array<std::array<T, 3>, 3> x{};
  x[0][1] = v[0];
  x[1][2] = v[1];
  x[2][0] = -v[2];
  x[1][0] = -v[3];
  x[2][1] = -v[4];
  x[0][2] = v[5];
  x[0][0] = v[7];
  x[1][1] = -v[6];
  x[2][2] = v[6] - v[7];
  return x;
}

template <typename T>
std::pair<T, T> trace_sq_and_det(const std::array<std::array<T, 3>, 3>& x) {
  T tr{};
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k < 3; ++k) tr += x[r][k] * x[k][r];
  const T det = x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1]) - x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0]) +
                x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0]);
  return {tr, det};
}

CPoly to_cpoly(const QPoly& p) {
  std::vector<CPoly::Term> terms(p.terms().begin(), p.terms().end());
  return CPoly::from_terms(p.arity(), std::move(terms));
}

std::vector<int> monomial_indices(const Monomial& m) {
  std::vector<int> idx;
  for (int k = 0; k < 8; ++k)
    for (int r = 0; r < m.e[k]; ++r) idx.push_back(k);
  return idx;
}

/// q and f as exact rational polynomials in y.
const std::pair<QPoly, QPoly>& exact_forms(int i) {
  static const std::pair<QPoly, QPoly> f0{q_w_poly(), f_w_poly()};
  static const std::pair<QPoly, QPoly> f1 = [] {
    const CMatrix hinv = real_form(1).h.inverse();
    const CPoly q = linear_substitute(to_cpoly(q_w_poly()), hinv);
    const CPoly f = GaussianRational::i() * linear_substitute(to_cpoly(f_w_poly()), hinv);
    auto real = [](const CPoly& p) {
      std::vector<QPoly::Term> terms;
      for (const auto& [m, c] : p.terms()) {
        if (!c.is_real()) throw Error("su(H1) form has a non-real coefficient");
        terms.emplace_back(m, c.re());
      }
      return QPoly::from_terms(8, std::move(terms));
    };
    return std::pair{real(q), real(f)};
  }();
  return i == 0 ? f0 : f1;
}

const kernels::FormTables& base_tables(int i) {
  static const auto build = [](int k) {
    kernels::FormTables t{};
    const auto& [q, f] = exact_forms(k);
    for (const auto& [m, c] : q.terms()) {
      const auto idx = monomial_indices(m);
      t.quad.push_back({idx[0], idx[1], c.to_double()});
    }
    for (const auto& [m, c] : f.terms()) {
      const auto idx = monomial_indices(m);
      t.cubic.push_back({idx[0], idx[1], idx[2], c.to_double()});
    }
    return t;
  };
  static const kernels::FormTables t0 = build(0), t1 = build(1);
  return i == 0 ? t0 : t1;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PVS_THREADS"); env && *env) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 1 || n > 1024) throw Error(std::string("PVS_THREADS must be a positive integer, got '") + env + "'");
    return static_cast<int>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t box_size(int n) {
  std::uint64_t s = 1;
  for (int k = 0; k < 8; ++k) s *= static_cast<std::uint64_t>(2 * n + 1);
  return s;
}

IntVec odometer(std::uint64_t index, int n) {
  IntVec v{};
  const std::uint64_t base = static_cast<std::uint64_t>(2 * n + 1);
  for (int k = 7; k >= 0; --k) {
    v[k] = static_cast<int>(index % base) - n;
    index /= base;
  }
  return v;
}

struct Partial {
  std::uint64_t count = 0;
  std::vector<double> window;
  std::vector<std::uint64_t> hist;
  double min_f_nz = INFINITY, min_q = INFINITY, min_q_nz = INFINITY;
  std::uint64_t q_zero = 0;
};

class BlockEvaluator {
 public:
  BlockEvaluator(const ScanConfig& cfg, const kernels::FormTables& tables, kernels::BatchFn fn, Partial& out)
      : cfg_(cfg), tables_(tables), fn_(fn), out_(out) {
    out_.hist.assign(cfg.bins, 0);
    buf_.reserve(kBlock);
  }
  void push(const IntVec& v) {
    buf_.push_back(v);
    if (buf_.size() == kBlock) flush();
  }
  void flush() {
    const std::size_t n = buf_.size();
    if (n == 0) return;
    soa_.resize(8 * n);
    q_.resize(n);
    f_.resize(n);
    for (std::size_t j = 0; j < n; ++j)
      for (int k = 0; k < 8; ++k) soa_[k * n + j] = buf_[j][k];
    fn_(tables_, soa_.data(), n, q_.data(), f_.data());
    const double width = cfg_.b - cfg_.a;
    for (std::size_t j = 0; j < n; ++j) {
      const double q = q_[j], f = f_[j];
      ++out_.count;
      out_.min_q = std::min(out_.min_q, std::abs(q));
      if (q == 0.0)
        ++out_.q_zero;
      else
        out_.min_q_nz = std::min(out_.min_q_nz, std::abs(q));
      if (f != 0.0) out_.min_f_nz = std::min(out_.min_f_nz, std::abs(f));
      if (f < cfg_.a || f > cfg_.b) continue;
      out_.window.push_back(f);
      const auto bin = static_cast<std::size_t>(std::floor((f - cfg_.a) / width * cfg_.bins));
      ++out_.hist[std::min<std::size_t>(bin, cfg_.bins - 1)];
    }
    buf_.clear();
  }

 private:
  static constexpr std::size_t kBlock = 2048;
  const ScanConfig& cfg_;
  const kernels::FormTables& tables_;
  kernels::BatchFn fn_;
  Partial& out_;
  std::vector<IntVec> buf_;
  std::vector<double> soa_, q_, f_;
};

std::optional<double> finite_or_empty(double x) {
  if (std::isinf(x)) return std::nullopt;
  return x;
}

json optional_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

}  // namespace

RealLinearMap::RealLinearMap(const Mat8& m) : m_(m) {
  if (!m_.allFinite()) throw Error("linear map has non-finite entries");
  if (Eigen::FullPivLU<Mat8>(m_).rank() < 8) throw Error("linear map is singular");
}

RealLinearMap RealLinearMap::near_identity(std::uint64_t seed, double eps) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat8 m = Mat8::Identity();
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) m(r, c) += eps * u(rng);
  return RealLinearMap(m);
}

double RealLinearMap::condition() const {
  const Eigen::JacobiSVD<Mat8> svd(m_);
  const auto& s = svd.singularValues();
  return s(0) / s(7);
}

LatticeBasis::LatticeBasis(std::array<IntVec, 8> columns) : cols_(columns) {
  QMatrix b(8, 8);
  for (int c = 0; c < 8; ++c)
    for (int r = 0; r < 8; ++r) b(r, c) = cols_[c][r];
  const Rational d = b.det();
  if (!(d == Rational(1) || d == Rational(-1))) throw Error("lattice basis must have determinant +-1, got " + d.str());
}

LatticeBasis LatticeBasis::standard() {
  std::array<IntVec, 8> cols{};
  for (int k = 0; k < 8; ++k) cols[k][k] = 1;
  cols[0][3] = cols[0][6] = 1;
  return LatticeBasis(cols);
}

FormValues form_values(int i, const RealLinearMap& g, const IntVec& v) {
  require_form_index(i);
  std::array<double, 8> y{};
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) y[r] += g(r, c) * v[c];
  if (i == 0) {
    const auto [tr, det] = trace_sq_and_det(coords_matrix(y));
    return {tr, det};
  }
  std::array<cd, 8> z{};
  const auto& hinv = hinv1();
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) z[r] += hinv[r][c] * y[c];
  const auto [tr, det] = trace_sq_and_det(coords_matrix(z));
  return {tr.real(), (cd(0, 1) * det).real()};
}

std::pair<Rational, Rational> exact_form_values(int i, const IntVec& v) {
  require_form_index(i);
  const std::vector<Rational> x(v.begin(), v.end());
  if (i == 0) return {q_w_poly().eval(x), f_w_poly().eval(x)};
  static const InvariantPair w1 = factor_invariants(builtin_w1(), builtin_transport("w1"));
  return {w1.q.to_poly().eval(x) / Rational(4096), w1.f.poly().eval(x) / Rational(512)};
}

kernels::FormTables form_tables(int i, const RealLinearMap& g) {
  require_form_index(i);
  kernels::FormTables t = base_tables(i);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) t.g[r * 8 + c] = g(r, c);
  return t;
}

bool is_primitive(const IntVec& v) {
  int g = 0;
  for (int c : v) g = std::gcd(g, c);
  return g == 1;
}

std::vector<IntVec> primitive_vectors(const Enumeration& e) {
  if (e.n < 1) throw Error("box radius must be at least 1");
  std::vector<IntVec> out;
  if (e.mode == Mode::Exhaustive) {
    if (e.n > 3) throw Error("exhaustive enumeration is limited to radius 3; use sampling");
    const std::uint64_t total = box_size(e.n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const IntVec v = odometer(idx, e.n);
      if (is_primitive(v)) out.push_back(v);
    }
    return out;
  }
  std::mt19937_64 rng(e.seed);
  std::uniform_int_distribution<int> d(-e.n, e.n);
  out.reserve(e.sample_count);
  while (out.size() < e.sample_count) {
    IntVec v;
    for (int& c : v) c = d(rng);
    if (is_primitive(v)) out.push_back(v);
  }
  return out;
}

std::uint64_t primitive_count(int n) {
  if (n < 1) throw Error("box radius must be at least 1");
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0, total = box_size(n); idx < total; ++idx)
    if (is_primitive(odometer(idx, n))) ++count;
  return count;
}

ScanReport scan(const ScanConfig& cfg) {
  require_form_index(cfg.i);
  if (!(cfg.a < cfg.b)) throw Error("scan window needs a < b");
  if (cfg.bins < 1) throw Error("histogram needs at least one bin");
  const Enumeration& e = cfg.enumeration;
  if (e.n < 1) throw Error("box radius must be at least 1");
  if (e.mode == Mode::Exhaustive && e.n > 3) throw Error("exhaustive enumeration is limited to radius 3; use sampling");
  if (e.mode == Mode::Sample && e.sample_count == 0) throw Error("sample mode needs a positive sample count");

  const kernels::Kind kind = cfg.kernel ? *cfg.kernel : kernels::select();
  const kernels::BatchFn fn = kernels::function(kind);
  const kernels::FormTables tables = form_tables(cfg.i, cfg.g);
  const int threads = resolve_threads(cfg.threads);

  std::vector<IntVec> samples;
  std::uint64_t total;
  if (e.mode == Mode::Sample) {
    samples = primitive_vectors(e);
    total = samples.size();
  } else {
    total = box_size(e.n);
  }

  std::vector<Partial> partials(threads);
  auto work = [&](int t) {
    const std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
    BlockEvaluator ev(cfg, tables, fn, partials[t]);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      if (e.mode == Mode::Sample) {
        ev.push(samples[idx]);
      } else {
        const IntVec v = odometer(idx, e.n);
        if (is_primitive(v)) ev.push(v);
      }
    }
    ev.flush();
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  ScanReport rep;
  rep.kernel = kernels::name(kind);
  rep.threads = threads;
  rep.bin_counts.assign(cfg.bins, 0);
  double min_f = INFINITY, min_q = INFINITY, min_q_nz = INFINITY;
  std::vector<double> all;
  for (const Partial& p : partials) {
    rep.count += p.count;
    rep.q_zero_count += p.q_zero;
    min_f = std::min(min_f, p.min_f_nz);
    min_q = std::min(min_q, p.min_q);
    min_q_nz = std::min(min_q_nz, p.min_q_nz);
    all.insert(all.end(), p.window.begin(), p.window.end());
    for (int b = 0; b < cfg.bins; ++b) rep.bin_counts[b] += p.hist[b];
  }
  std::sort(all.begin(), all.end());
  rep.in_window = all.size();
  for (std::size_t k = 1; k < all.size(); ++k) {
    const double gap = all[k] - all[k - 1];
    if (!rep.max_gap || gap > *rep.max_gap) rep.max_gap = gap;
  }
  if (all.size() > cfg.cap) {
    rep.spill = all.size() - cfg.cap;
    all.resize(cfg.cap);
  }
  rep.values = std::move(all);
  for (int b = 0; b <= cfg.bins; ++b) rep.bin_edges.push_back(cfg.a + (cfg.b - cfg.a) * b / cfg.bins);
  rep.min_abs_f_nonzero = finite_or_empty(min_f);
  rep.min_abs_q = finite_or_empty(min_q);
  rep.min_abs_q_nonzero = finite_or_empty(min_q_nz);
  return rep;
}

ConstructedH construct_h(double r, const LatticeBasis& basis, double lambda, int i, double tol) {
  require_form_index(i);
  if (r == 0.0) throw ZeroTarget("target value must be nonzero");
  if (!std::isfinite(r)) throw Error("target value must be finite");
  if (lambda == 0.0 || !std::isfinite(lambda)) throw Error("lambda must be finite and nonzero");

  ConstructedH out;
  out.anchor = -1;
  for (int k = 0; k < 8; ++k) {
    if (exact_form_values(i, basis.columns()[k]).second.is_zero()) continue;
    out.anchor = k;
    break;
  }
  if (out.anchor < 0) throw NoAnchorVector("F vanishes on every basis vector");
  out.u1 = basis.columns()[out.anchor];
  out.s = exact_form_values(i, out.u1).second.to_double();
  out.target = r / std::pow(lambda, 7);
  out.t = std::cbrt(out.target / out.s);

  Mat8 b, d = Mat8::Zero();
  for (int c = 0; c < 8; ++c)
    for (int rr = 0; rr < 8; ++rr) b(rr, c) = basis.columns()[c][rr];
  const double other = std::pow(std::abs(out.t), -1.0 / 7.0) * (out.t < 0 ? -1.0 : 1.0);
  for (int k = 0; k < 8; ++k) d(k, k) = k == out.anchor ? out.t : other;
  out.h = RealLinearMap(b * d * b.inverse());
  out.achieved = form_values(i, out.h, out.u1).f;
  out.residual = std::abs(out.achieved - out.target);
  if (out.residual > tol * std::max(1.0, std::abs(out.target)))
    throw Error("constructed h misses the target: residual " + std::to_string(out.residual));
  return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> rational_approx(double x, std::int64_t max_den, double rel_tol) {
  if (!std::isfinite(x)) return std::nullopt;
  const double tol = rel_tol * std::max(1.0, std::abs(x));
  // Convergents h_k / k_k of the continued fraction of x.
  long double h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  long double rest = x;
  for (int step = 0; step < 64; ++step) {
    const long double a = std::floor(rest);
    const long double h = a * h1 + h2, k = a * k1 + k2;
    if (k > static_cast<long double>(max_den)) return std::nullopt;
    if (std::abs(static_cast<double>(h / k) - x) <= tol)
      return std::pair{static_cast<std::int64_t>(h), static_cast<std::int64_t>(k)};
    const long double frac = rest - a;
    if (frac == 0) return std::nullopt;
    rest = 1 / frac;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  return std::nullopt;
}

RationalityReport rationality_report(int i, const RealLinearMap& g, std::int64_t max_den, double rel_tol) {
  require_form_index(i);
  Mat8 gram = Mat8::Zero();
  for (const auto& t : base_tables(i).quad) {
    if (t.a == t.b) {
      gram(t.a, t.a) += t.c;
    } else {
      gram(t.a, t.b) += t.c / 2;
      gram(t.b, t.a) += t.c / 2;
    }
  }
  const Mat8 m = g.matrix().transpose() * gram * g.matrix();

  RationalityReport rep;
  // Pivot: the first entry in row-major order that is not negligible against the largest one.
  const double scale = m.cwiseAbs().maxCoeff();
  for (int k = 0; k < 64 && rep.pivot == 0.0; ++k)
    if (std::abs(m(k / 8, k % 8)) > 1e-12 * scale) {
      rep.pivot = m(k / 8, k % 8);
      rep.pivot_row = k / 8;
      rep.pivot_col = k % 8;
    }
  if (rep.pivot == 0.0) {
    rep.verdict = "zero form";
    return rep;
  }
  mpz_class lcm = 1;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      auto pq = rational_approx(m(r, c) / rep.pivot, max_den, rel_tol);
      if (!pq) {
        ++rep.unresolved;
        continue;
      }
      lcm = ::lcm(lcm, mpz_class(static_cast<long>(pq->second)));
    }
  rep.rational = rep.unresolved == 0;
  if (rep.rational && !lcm.fits_slong_p()) {
    rep.rational = false;
    rep.verdict = "no rational model within bound (common denominator overflows)";
    return rep;
  }
  rep.common_denominator = rep.rational ? lcm.get_si() : 0;
  rep.verdict = rep.rational ? "rational multiple detected" : "no rational model within bound";
  return rep;
}

json to_json(const ScanReport& r) {
  return json{{"count", r.count},
              {"in_window", r.in_window},
              {"values", r.values},
              {"spill", r.spill},
              {"max_gap", optional_json(r.max_gap)},
              {"gap_defined", r.max_gap.has_value()},
              {"hist", {{"bins", r.bin_edges}, {"counts", r.bin_counts}}},
              {"min_abs_f_nonzero", optional_json(r.min_abs_f_nonzero)},
              {"min_abs_q", optional_json(r.min_abs_q)},
              {"min_abs_q_nonzero", optional_json(r.min_abs_q_nonzero)},
              {"q_zero_count", r.q_zero_count},
              {"kernel", r.kernel},
              {"threads", r.threads}};
}

json to_json(const RealLinearMap& g) {
  json rows = json::array();
  for (int r = 0; r < 8; ++r) {
    json row = json::array();
    for (int c = 0; c < 8; ++c) row.push_back(g(r, c));
    rows.push_back(row);
  }
  return json{{"g", rows}};
}

json to_json(const ConstructedH& c) {
  return json{{"h", to_json(c.h)["g"]},
              {"u1", c.u1},
              {"anchor", c.anchor + 1},
              {"s", c.s},
              {"target", c.target},
              {"t", c.t},
              {"achieved", c.achieved},
              {"residual", c.residual},
              {"det_h", c.h.matrix().determinant()}};
}

json to_json(const RationalityReport& r) {
  return json{{"verdict", r.verdict},
              {"rational", r.rational},
              {"common_denominator", r.common_denominator},
              {"pivot", {{"row", r.pivot_row + 1}, {"col", r.pivot_col + 1}, {"value", r.pivot}}},
              {"unresolved_entries", r.unresolved},
              {"note", "bounded-denominator heuristic; irrationality is not decidable from floating-point data"}};
}

RealLinearMap real_map_from_json(const json& j) {
  const json& rows = j.is_object() ? j.at("g") : j;
  if (!rows.is_array() || rows.size() != 8) throw ParseError("g must be an 8x8 array");
  Mat8 m;
  for (int r = 0; r < 8; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 8) throw ParseError("g must be an 8x8 array");
    for (int c = 0; c < 8; ++c) {
      const json& x = rows[r][c];
      if (x.is_number())
        m(r, c) = x.get<double>();
      else if (x.is_string())
        m(r, c) = Rational::parse(x.get<std::string>()).to_double();
      else
        throw ParseError("g entries must be numbers or \"p/q\" strings");
    }
  }
  return RealLinearMap(m);
}

LatticeBasis lattice_basis_from_json(const json& j) {
  const json& cols = j.is_object() ? j.at("basis") : j;
  if (!cols.is_array() || cols.size() != 8) throw ParseError("basis must list 8 column vectors");
  std::array<IntVec, 8> out{};
  try {
    for (int c = 0; c < 8; ++c) {
      const auto col = cols[c].get<std::vector<int>>();
      if (col.size() != 8) throw ParseError("basis vectors must have 8 entries");
      std::copy(col.begin(), col.end(), out[c].begin());
    }
  } catch (const json::exception& ex) {
    throw ParseError(std::string("basis JSON: ") + ex.what());
  }
  return LatticeBasis(out);
}

}  // namespace pvs::lab
