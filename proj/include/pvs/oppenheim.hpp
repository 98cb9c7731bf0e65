#pragma once

// Floating-point lab for values of (Q_i, F_i) at g v over primitive integer vectors v.
//
// i = 0: X = coords_to_matrix(y), q = tr X^2, f = det X.
// i = 1: X = to_su(1, y) in su(H1), q = tr X^2, f = sqrt(-1) det X (real).
// Here y = g v. Values are unscaled; Q_{w1} = 2^12 q and F_{w1} = 2^9 f.

#include "pvs/codec.hpp"
#include "pvs/kernels.hpp"
#include "pvs/rational.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pvs::lab {

class ZeroTarget : public Error {
 public:
  using Error::Error;
};

class NoAnchorVector : public Error {
 public:
  using Error::Error;
};

using IntVec = std::array<int, 8>;
using Mat8 = Eigen::Matrix<double, 8, 8, Eigen::RowMajor>;

class RealLinearMap {
 public:
  RealLinearMap() : m_(Mat8::Identity()) {}
  /// Throws unless every entry is finite and the matrix is invertible.
  explicit RealLinearMap(const Mat8& m);

  static RealLinearMap identity() { return {}; }
  /// I + eps * U with U uniform in [-1, 1), seed-deterministic.
  static RealLinearMap near_identity(std::uint64_t seed, double eps = 0.05);

  const Mat8& matrix() const { return m_; }
  double operator()(int r, int c) const { return m_(r, c); }
  /// Ratio of extreme singular values.
  double condition() const;

 private:
  Mat8 m_;
};

/// Eight integer columns with determinant +-1.
class LatticeBasis {
 public:
  explicit LatticeBasis(std::array<IntVec, 8> columns);
  /// b1 = e1 + e4 + e7, b_k = e_k for k >= 2. F_0(b1) = 1, F_1(b1) = 1/2.
  static LatticeBasis standard();
  const std::array<IntVec, 8>& columns() const { return cols_; }

 private:
  std::array<IntVec, 8> cols_;
};

struct FormValues {
  double q = 0;
  double f = 0;
};

/// Reference evaluation through the 3x3 matrix X.
FormValues form_values(int i, const RealLinearMap& g, const IntVec& v);
/// Exact q and f for g = I, through the invariant polynomials (Q_w, F_w for i = 0; 2^-12 Q_{w1}, 2^-9 F_{w1} for i = 1).
std::pair<Rational, Rational> exact_form_values(int i, const IntVec& v);
/// Coefficient tables of q and f as polynomials in y, with g filled in.
kernels::FormTables form_tables(int i, const RealLinearMap& g);

enum class Mode { Exhaustive, Sample };

struct Enumeration {
  int n = 1;
  Mode mode = Mode::Exhaustive;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
};

/// Exhaustive: every gcd-1 vector with max-norm <= n, in odometer order. Sample: sample_count draws.
std::vector<IntVec> primitive_vectors(const Enumeration& e);
/// Count of primitive vectors with max-norm <= n.
std::uint64_t primitive_count(int n);
bool is_primitive(const IntVec& v);

struct ScanConfig {
  int i = 0;
  RealLinearMap g;
  Enumeration enumeration;
  double a = -10;
  double b = 10;
  std::size_t cap = 100000;  ///< stored window values
  int bins = 20;
  int threads = 0;  ///< 0: PVS_THREADS or hardware concurrency
  std::optional<kernels::Kind> kernel;  ///< default: kernels::select()
};

struct ScanReport {
  std::uint64_t count = 0;  ///< vectors scanned
  std::uint64_t in_window = 0;
  std::vector<double> values;  ///< smallest in-window F-values, sorted, at most cap
  std::uint64_t spill = 0;  ///< in-window values beyond cap
  std::optional<double> max_gap;  ///< over all in-window values; empty with fewer than two
  std::vector<double> bin_edges;
  std::vector<std::uint64_t> bin_counts;
  std::optional<double> min_abs_f_nonzero;
  std::optional<double> min_abs_q;
  std::optional<double> min_abs_q_nonzero;
  std::uint64_t q_zero_count = 0;
  std::string kernel;
  int threads = 1;
};

ScanReport scan(const ScanConfig& cfg);

struct ConstructedH {
  RealLinearMap h;
  IntVec u1{};
  int anchor = 0;  ///< 0-based index of u1 in the basis
  double s = 0;  ///< F(u1)
  double target = 0;  ///< r' = lambda^-7 r
  double t = 0;
  double achieved = 0;  ///< F(h u1)
  double residual = 0;
};

/// h scales u1 by t = (r'/s)^(1/3) and the other basis vectors by t^(-1/7); det h = 1.
ConstructedH construct_h(double r, const LatticeBasis& basis = LatticeBasis::standard(), double lambda = 1.0,
                         int i = 1, double tol = 1e-9);

struct RationalityReport {
  bool rational = false;
  std::int64_t common_denominator = 0;
  int pivot_row = 0, pivot_col = 0;
  double pivot = 0;
  int unresolved = 0;  ///< entries without a rational model
  std::string verdict;
};

/// Bounded-denominator search for a rational multiple of the Gram matrix of v -> q(g v). Heuristic.
RationalityReport rationality_report(int i, const RealLinearMap& g, std::int64_t max_den = 1000000,
                                     double rel_tol = 1e-14);

/// Continued-fraction approximation p/q with q <= max_den and |x - p/q| <= rel_tol * max(1, |x|).
std::optional<std::pair<std::int64_t, std::int64_t>> rational_approx(double x, std::int64_t max_den, double rel_tol);

json to_json(const ScanReport& r);
json to_json(const ConstructedH& c);
json to_json(const RationalityReport& r);
json to_json(const RealLinearMap& g);
RealLinearMap real_map_from_json(const json& j);
LatticeBasis lattice_basis_from_json(const json& j);

}  // namespace pvs::lab
