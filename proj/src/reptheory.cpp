#include "pvs/reptheory.hpp"

#include "pvs/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace pvs::rep {

namespace {

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix chain(int n, int diag) {
  IntMatrix f(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) f[i][i] = diag;
  for (int i = 0; i + 1 < n; ++i) f[i][i + 1] = f[i + 1][i] = -diag / 2;
  return f;
}

void link(IntMatrix& f, int i, int j, int v) { f[i - 1][j - 1] = f[j - 1][i - 1] = v; }

IntMatrix symmetrized_form(char type, int n) {
  switch (type) {
    case 'A':
      if (n < 1) break;
      return chain(n, 2);
    case 'B': {
      if (n < 2) break;
      IntMatrix f = chain(n, 4);
      f[n - 1][n - 1] = 2;
      return f;
    }
    case 'C': {
      if (n < 2) break;
      IntMatrix f = chain(n, 2);
      f[n - 1][n - 1] = 4;
      link(f, n - 1, n, -2);
      return f;
    }
    case 'D': {
      if (n < 3) break;
      IntMatrix f = chain(n, 2);
      link(f, n - 1, n, 0);
      link(f, n - 2, n, -1);
      return f;
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      IntMatrix f(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) f[i][i] = 2;
      link(f, 1, 3, -1);
      link(f, 2, 4, -1);
      for (int i = 3; i < n; ++i) link(f, i, i + 1, -1);
      return f;
    }
    case 'F': {
      if (n != 4) break;
      IntMatrix f = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      return f;
    }
    case 'G':
      if (n != 2) break;
      return {{2, -3}, {-3, 6}};
    default:
      break;
  }
  throw InvalidType("no simple root system of type " + std::string(1, type) + std::to_string(n));
}

std::size_t expected_positive_roots(char type, int n) {
  switch (type) {
    case 'A': return static_cast<std::size_t>(n * (n + 1) / 2);
    case 'B':
    case 'C': return static_cast<std::size_t>(n * n);
    case 'D': return static_cast<std::size_t>(n * (n - 1));
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;
  }
}

std::vector<std::vector<Rational>> invert(const IntMatrix& c) {
  const int n = static_cast<int>(c.size());
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = c[i][j];
  const QMatrix inv = m.inverse();
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = inv(i, j);
  return out;
}

void require_dominant(const Weight& lambda, const RootSystem& rs) {
  if (static_cast<int>(lambda.size()) != rs.rank)
    throw DimensionMismatch("weight has " + std::to_string(lambda.size()) + " entries, " + rs.name() + " has rank " +
                            std::to_string(rs.rank));
  if (!is_dominant(lambda)) throw NonDominantWeight("weight is not dominant");
}

Weight add(Weight a, const Weight& b, int scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

Weight dominant_conjugate(const RootSystem& rs, Weight mu) {
  for (;;) {
    auto it = std::find_if(mu.begin(), mu.end(), [](int c) { return c < 0; });
    if (it == mu.end()) return mu;
    mu = rs.reflect(mu, static_cast<int>(it - mu.begin()) + 1);
  }
}

/// lambda - mu as a nonnegative integer combination of simple roots.
bool below(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  const Weight d = add(lambda, mu, -1);
  for (int k = 0; k < rs.rank; ++k) {
    Rational c;
    for (int i = 0; i < rs.rank; ++i) c += Rational(d[i]) * rs.inverse_cartan[i][k];
    if (c.sign() < 0 || !c.is_integer()) return false;
  }
  return true;
}

}  // namespace

Weight RootSystem::fundamental(int i) const {
  if (i < 1 || i > rank) throw Error("fundamental weight index out of range");
  Weight w(rank, 0);
  w[i - 1] = 1;
  return w;
}

Weight RootSystem::root_weight(const Root& beta) const {
  Weight w(rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int k = 0; k < rank; ++k) w[i] += beta[k] * cartan[k][i];
  return w;
}

std::int64_t RootSystem::pair(const Weight& lambda, const Root& beta) const {
  std::int64_t s = 0;
  for (int k = 0; k < rank; ++k) s += static_cast<std::int64_t>(beta[k]) * lambda[k] * (form[k][k] / 2);
  return s;
}

Rational RootSystem::inner(const Weight& lambda, const Weight& mu) const {
  Rational s;
  for (int i = 0; i < rank; ++i) {
    if (lambda[i] == 0) continue;
    for (int j = 0; j < rank; ++j)
      if (mu[j] != 0) s += Rational(lambda[i] * mu[j] * (form[j][j] / 2)) * inverse_cartan[i][j];
  }
  return s;
}

Rational RootSystem::height(const Weight& lambda) const {
  Rational h;
  for (int i = 0; i < rank; ++i)
    for (int k = 0; k < rank; ++k) h += Rational(lambda[i]) * inverse_cartan[i][k];
  return h;
}

Weight RootSystem::reflect(const Weight& mu, int i) const {
  if (i < 1 || i > rank) throw Error("simple reflection index out of range");
  Weight r = mu;
  const int m = mu[i - 1];
  for (int j = 0; j < rank; ++j) r[j] -= m * cartan[i - 1][j];
  return r;
}

RootSystem root_system(char type, int rank) {
  if (rank > 32) throw InvalidType("rank too large");
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.form = symmetrized_form(type, rank);
  rs.cartan.assign(rank, std::vector<int>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.cartan[i][j] = 2 * rs.form[i][j] / rs.form[j][j];
  rs.inverse_cartan = invert(rs.cartan);

  // Positive roots: closure of the simple roots under simple reflections that stay positive.
  std::set<Root> seen;
  std::vector<Root> frontier;
  for (int i = 0; i < rank; ++i) {
    Root a(rank, 0);
    a[i] = 1;
    seen.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& beta : frontier) {
      const Weight bw = rs.root_weight(beta);
      for (int i = 0; i < rank; ++i) {
        Root r = beta;
        r[i] -= bw[i];
        if (std::any_of(r.begin(), r.end(), [](int c) { return c < 0; })) continue;
        if (seen.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  rs.positive_roots.assign(seen.begin(), seen.end());
  std::stable_sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const Root& a, const Root& b) {
    int ha = 0, hb = 0;
    for (int c : a) ha += c;
    for (int c : b) hb += c;
    return ha < hb;
  });
  if (rs.positive_roots.size() != expected_positive_roots(type, rank))
    throw Error("root closure produced " + std::to_string(rs.positive_roots.size()) + " positive roots for " + rs.name());
  return rs;
}

RootSystem root_system(const std::string& name) {
  if (name.size() < 2 || !std::isalpha(static_cast<unsigned char>(name[0])))
    throw InvalidType("root system name must look like A2 or E8: '" + name + "'");
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw InvalidType("bad rank in root system name '" + name + "'");
  }
  return root_system(static_cast<char>(std::toupper(static_cast<unsigned char>(name[0]))), rank);
}

bool is_dominant(const Weight& lambda) {
  return std::all_of(lambda.begin(), lambda.end(), [](int c) { return c >= 0; });
}

std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda) {
  require_dominant(lambda, rs);
  const Weight lr = add(lambda, rs.rho());
  mpz_class num = 1, den = 1;
  for (const Root& beta : rs.positive_roots) {
    num *= rs.pair(lr, beta);
    den *= rs.pair(rs.rho(), beta);
  }
  if (num % den != 0) throw Error("Weyl dimension is not an integer");
  const mpz_class d = num / den;
  if (!d.fits_slong_p()) throw Error("Weyl dimension overflows 64 bits");
  return d.get_si();
}

Character irr_character(const RootSystem& rs, const Weight& lambda) {
  require_dominant(lambda, rs);
  const Weight rho = rs.rho();
  const Rational top = rs.inner(add(lambda, rho), add(lambda, rho));
  auto is_weight = [&](const Weight& mu) { return below(rs, lambda, dominant_conjugate(rs, mu)); };

  Character ch;
  ch[lambda] = 1;
  std::vector<Weight> layer = {lambda};
  std::vector<Weight> simple(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    Root a(rs.rank, 0);
    a[i] = 1;
    simple[i] = rs.root_weight(a);
  }
  std::vector<Weight> root_weights;
  for (const Root& beta : rs.positive_roots) root_weights.push_back(rs.root_weight(beta));

  while (!layer.empty()) {
    std::set<Weight> candidates;
    for (const Weight& nu : layer)
      for (const Weight& a : simple) {
        Weight mu = add(nu, a, -1);
        if (!ch.count(mu) && is_weight(mu)) candidates.insert(std::move(mu));
      }
    std::vector<Weight> next;
    for (const Weight& mu : candidates) {
      std::int64_t acc = 0;
      for (std::size_t b = 0; b < rs.positive_roots.size(); ++b) {
        Weight shifted = add(mu, root_weights[b]);
        for (auto it = ch.find(shifted); it != ch.end(); it = ch.find(shifted)) {
          acc += it->second * rs.pair(shifted, rs.positive_roots[b]);
          shifted = add(shifted, root_weights[b]);
        }
      }
      const Rational gap = top - rs.inner(add(mu, rho), add(mu, rho));
      const Rational m = Rational(2 * acc) / gap;
      if (!m.is_integer() || m.sign() <= 0) throw Error("Freudenthal recursion produced a non-integral multiplicity");
      ch[mu] = m.raw().get_num().get_si();
      next.push_back(mu);
    }
    layer = std::move(next);
  }
  return ch;
}

std::int64_t character_dim(const Character& ch) {
  std::int64_t d = 0;
  for (const auto& [w, m] : ch) d += m;
  return d;
}

Character tensor_character(const Character& a, const Character& b) {
  Character out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) out[add(wa, wb)] += ma * mb;
  return out;
}

Character alt3_character(const Character& ch) {
  std::vector<const Weight*> slots;
  for (const auto& [w, m] : ch)
    for (std::int64_t k = 0; k < m; ++k) slots.push_back(&w);
  Character out;
  const std::size_t n = slots.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Weight ij = add(*slots[i], *slots[j]);
      for (std::size_t k = j + 1; k < n; ++k) out[add(ij, *slots[k])] += 1;
    }
  return out;
}

DecompList decompose(const RootSystem& rs, Character ch) {
  DecompList out;
  for (;;) {
    std::erase_if(ch, [](const auto& kv) { return kv.second == 0; });
    if (ch.empty()) return out;
    auto best = ch.end();
    Rational best_h;
    for (auto it = ch.begin(); it != ch.end(); ++it) {
      const Rational h = rs.height(it->first);
      if (best == ch.end() || h > best_h || (h == best_h && it->first > best->first)) {
        best = it;
        best_h = h;
      }
    }
    const Weight top = best->first;
    const std::int64_t mult = best->second;
    if (mult < 0 || !is_dominant(top)) throw Error("character is not a nonnegative sum of irreducibles");
    out[top] += mult;
    for (const auto& [w, m] : irr_character(rs, top)) ch[w] -= mult * m;
  }
}

DecompList tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  return decompose(rs, tensor_character(irr_character(rs, lambda), irr_character(rs, mu)));
}

DecompList alt3_decompose(const RootSystem& rs, const Weight& lambda) {
  return decompose(rs, alt3_character(irr_character(rs, lambda)));
}

std::vector<Weight> irreps_of_dim(const RootSystem& rs, std::int64_t d) {
  if (d < 1) throw Error("dimension must be positive");
  // weyl_dim is strictly increasing in every coordinate, so {weyl_dim <= d} is finite and downward closed.
  std::set<Weight> seen = {rs.zero()};
  std::vector<Weight> stack = {rs.zero()};
  std::vector<Weight> out;
  while (!stack.empty()) {
    const Weight w = stack.back();
    stack.pop_back();
    if (weyl_dim(rs, w) == d) out.push_back(w);
    for (int i = 0; i < rs.rank; ++i) {
      Weight up = w;
      ++up[i];
      if (seen.count(up) || weyl_dim(rs, up) > d) continue;
      seen.insert(up);
      stack.push_back(up);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Table45Row> table45(int max_rank) {
  struct RowDef {
    char type;
    int lo, hi;
    std::string dim_formula, rep_formula;
    int (*dim)(int);
    int (*rep)(int);
  };
  const std::vector<RowDef> defs = {
      {'A', 1, max_rank, "(n+1)^2 - 1", "n+1", [](int n) { return (n + 1) * (n + 1) - 1; }, [](int n) { return n + 1; }},
      {'B', 3, max_rank, "2n^2 + n", "2n+1", [](int n) { return 2 * n * n + n; }, [](int n) { return 2 * n + 1; }},
      {'C', 2, max_rank, "2n^2 + n", "2n", [](int n) { return 2 * n * n + n; }, [](int n) { return 2 * n; }},
      {'D', 4, max_rank, "2n^2 - n", "2n", [](int n) { return 2 * n * n - n; }, [](int n) { return 2 * n; }},
      {'E', 6, 6, "78", "27", [](int) { return 78; }, [](int) { return 27; }},
      {'E', 7, 7, "133", "56", [](int) { return 133; }, [](int) { return 56; }},
      {'E', 8, 8, "248", "3875", [](int) { return 248; }, [](int) { return 3875; }},
      {'F', 4, 4, "52", "26", [](int) { return 52; }, [](int) { return 26; }},
      {'G', 2, 2, "14", "7", [](int) { return 14; }, [](int) { return 7; }},
  };
  std::vector<Table45Row> rows;
  for (const RowDef& s : defs) {
    Table45Row row{s.type, s.dim_formula, s.rep_formula, {}};
    for (int n = s.lo; n <= s.hi; ++n) {
      const RootSystem rs = root_system(s.type, n);
      Table45Entry e;
      e.algebra = rs.name();
      e.rank = n;
      e.algebra_dim = rs.algebra_dim();
      e.expected_algebra_dim = s.dim(n);
      e.expected_rep = s.rep(n);
      for (int i = 1; i <= n; ++i) e.fundamental_dims.push_back(weyl_dim(rs, rs.fundamental(i)));
      e.smallest_rep = *std::min_element(e.fundamental_dims.begin(), e.fundamental_dims.end());
      row.entries.push_back(std::move(e));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<int>& candidate_dimensions() {
  static const std::vector<int> dims = {16, 18, 26, 28, 35, 36, 43, 45, 53, 55};
  return dims;
}

std::vector<ScreeningHit> screen_candidates() {
  std::vector<RootSystem> simple;
  for (int n = 1; (n + 1) * (n + 1) - 1 <= 55; ++n) simple.push_back(root_system('A', n));
  for (int n = 2; 2 * n * n + n <= 55; ++n) simple.push_back(root_system('B', n));
  for (int n = 3; 2 * n * n + n <= 55; ++n) simple.push_back(root_system('C', n));
  for (int n = 4; 2 * n * n - n <= 55; ++n) simple.push_back(root_system('D', n));
  simple.push_back(root_system('F', 4));
  simple.push_back(root_system('G', 2));
  std::vector<ScreeningHit> hits;
  for (int d : candidate_dimensions()) {
    ScreeningHit hit{d, {}, {}};
    for (const RootSystem& rs : simple) {
      if (rs.algebra_dim() != d) continue;
      hit.algebras.push_back(rs.name());
      if (!irreps_of_dim(rs, 8).empty()) hit.with_rep8.push_back(rs.name());
    }
    if (!hit.algebras.empty()) hits.push_back(std::move(hit));
  }
  return hits;
}

json to_json(const Weight& w) { return json(w); }

json to_json(const std::map<Weight, std::int64_t>& m) {
  json arr = json::array();
  for (const auto& [w, c] : m) arr.push_back(json{{"weight", w}, {"mult", c}});
  return arr;
}

json to_json(const Table45Row& row) {
  json entries = json::array();
  for (const auto& e : row.entries)
    entries.push_back(json{{"algebra", e.algebra},
                           {"dim", e.algebra_dim},
                           {"expected_dim", e.expected_algebra_dim},
                           {"smallest_rep", e.smallest_rep},
                           {"expected_rep", e.expected_rep},
                           {"fundamental_dims", e.fundamental_dims}});
  return json{{"type", std::string(1, row.type)},
              {"dim_formula", row.dim_formula},
              {"rep_formula", row.rep_formula},
              {"entries", entries}};
}

json to_json(const ScreeningHit& hit) {
  return json{{"dim", hit.dim}, {"algebras", hit.algebras}, {"with_rep8", hit.with_rep8}};
}

Weight weight_from_json(const json& j) {
  try {
    return j.get<Weight>();
  } catch (const json::exception& ex) {
    throw ParseError(std::string("weight JSON: ") + ex.what());
  }
}

Weight parse_weight(const std::string& s) {
  std::string t;
  for (char c : s) t += (c == ',' || c == '[' || c == ']' || c == '(' || c == ')') ? ' ' : c;
  std::istringstream in(t);
  Weight w;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      w.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("bad weight entry '" + tok + "' in '" + s + "'");
    }
  }
  if (w.empty()) throw ParseError("empty weight '" + s + "'");
  return w;
}

}  // namespace pvs::rep
