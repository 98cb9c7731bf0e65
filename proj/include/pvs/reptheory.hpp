#pragma once

// Root systems from Cartan data, Weyl dimensions, Freudenthal characters and
// decompositions by highest-weight peeling.
//
// Weights use fundamental-weight coordinates, roots use simple-root coordinates.
// Node numbering follows Bourbaki.

#include "pvs/codec.hpp"
#include "pvs/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pvs::rep {

class InvalidType : public Error {
 public:
  using Error::Error;
};

class NonDominantWeight : public Error {
 public:
  using Error::Error;
};

using Weight = std::vector<int>;
using Root = std::vector<int>;
using Character = std::map<Weight, std::int64_t>;
using DecompList = std::map<Weight, std::int64_t>;

struct RootSystem {
  char type = 'A';
  int rank = 0;
  /// form[i][j] = (alpha_i, alpha_j), scaled so every entry is an integer and every (alpha_i, alpha_i) is even.
  std::vector<std::vector<int>> form;
  /// cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  std::vector<std::vector<int>> cartan;
  std::vector<Root> positive_roots;

  std::string name() const { return std::string(1, type) + std::to_string(rank); }
  int algebra_dim() const { return 2 * static_cast<int>(positive_roots.size()) + rank; }
  Weight rho() const { return Weight(rank, 1); }
  Weight zero() const { return Weight(rank, 0); }
  Weight fundamental(int i) const;  ///< 1-based

  /// Fundamental coordinates of a root: <beta, alpha_i^vee>.
  Weight root_weight(const Root& beta) const;
  /// (lambda, beta) for lambda in fundamental and beta in simple-root coordinates.
  std::int64_t pair(const Weight& lambda, const Root& beta) const;
  /// (lambda, mu) for fundamental coordinates.
  Rational inner(const Weight& lambda, const Weight& mu) const;
  /// Height of lambda in simple-root coordinates.
  Rational height(const Weight& lambda) const;
  /// s_i(mu), 1-based.
  Weight reflect(const Weight& mu, int i) const;

  std::vector<std::vector<Rational>> inverse_cartan;  ///< omega_i = sum_k inverse_cartan[i][k] alpha_k
};

RootSystem root_system(char type, int rank);
/// "A2", "E8", ...
RootSystem root_system(const std::string& name);

bool is_dominant(const Weight& lambda);
std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda);
Character irr_character(const RootSystem& rs, const Weight& lambda);
std::int64_t character_dim(const Character& ch);

Character tensor_character(const Character& a, const Character& b);
/// Alternating cube, computed over 3-subsets of weight slots.
Character alt3_character(const Character& ch);
/// Peels off irreducible characters, highest dominant weight first.
DecompList decompose(const RootSystem& rs, Character ch);

DecompList tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu);
DecompList alt3_decompose(const RootSystem& rs, const Weight& lambda);
/// Every dominant weight with weyl_dim == d, in lexicographic order.
std::vector<Weight> irreps_of_dim(const RootSystem& rs, std::int64_t d);

struct Table45Entry {
  std::string algebra;  ///< e.g. "B3"
  int rank = 0;
  int algebra_dim = 0;
  int expected_algebra_dim = 0;
  std::int64_t smallest_rep = 0;  ///< min over fundamental representations
  std::int64_t expected_rep = 0;  ///< the tabulated value
  std::vector<std::int64_t> fundamental_dims;
};

struct Table45Row {
  char type = 'A';
  std::string dim_formula;
  std::string rep_formula;
  std::vector<Table45Entry> entries;
};

/// Classical rows for ranks up to max_rank (A n>=1, B n>=3, C n>=2, D n>=4) and the five exceptional rows.
std::vector<Table45Row> table45(int max_rank = 8);

struct ScreeningHit {
  int dim = 0;
  std::vector<std::string> algebras;  ///< simple algebras of that dimension
  std::vector<std::string> with_rep8;  ///< those that have an 8-dimensional irreducible representation
};

/// Candidate subalgebra dimensions 16, 18, ..., 55 matched against simple algebras of dimension <= 55.
std::vector<ScreeningHit> screen_candidates();
const std::vector<int>& candidate_dimensions();

json to_json(const Weight& w);
json to_json(const std::map<Weight, std::int64_t>& m);
json to_json(const Table45Row& row);
json to_json(const ScreeningHit& hit);
Weight weight_from_json(const json& j);
/// "1,1" or "[1,1]"
Weight parse_weight(const std::string& s);

}  // namespace pvs::rep
