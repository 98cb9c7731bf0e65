#pragma once

// JSON codecs for exact scalars, polynomials and matrices.
//   Rational:          "p/q"
//   GaussianRational:  {"re": "p/q", "im": "p/q"}
//   MultiPoly:         {"arity": n, "terms": [{"exp": [...], "c": ...}]}, graded-lex order

#include "pvs/matrix.hpp"

#include <json.hpp>

namespace pvs {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.str(); }
inline json to_json(const GaussianRational& z) { return json{{"re", z.re().str()}, {"im", z.im().str()}}; }

Rational rational_from_json(const json& j);
GaussianRational gaussian_from_json(const json& j);

template <ExactField K>
K scalar_from_json(const json& j) {
  if constexpr (std::same_as<K, Rational>) return rational_from_json(j);
  else return gaussian_from_json(j);
}

template <ExactField K>
json to_json(const MultiPoly<K>& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json e = json::array();
    for (int i = 0; i < p.arity(); ++i) e.push_back(static_cast<int>(m.e[i]));
    terms.push_back(json{{"exp", std::move(e)}, {"c", to_json(c)}});
  }
  return json{{"arity", p.arity()}, {"terms", std::move(terms)}};
}

template <ExactField K>
MultiPoly<K> poly_from_json(const json& j) {
  try {
    const int arity = j.at("arity").get<int>();
    std::vector<typename MultiPoly<K>::Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto& e = t.at("exp");
      if (static_cast<int>(e.size()) != arity) throw ParseError("exponent vector length differs from arity");
      Monomial m;
      for (int i = 0; i < arity; ++i) {
        const int x = e[i].get<int>();
        if (x < 0 || x > 255) throw ParseError("exponent out of range");
        m.e[i] = static_cast<std::uint8_t>(x);
      }
      terms.emplace_back(m, scalar_from_json<K>(t.at("c")));
    }
    return MultiPoly<K>::from_terms(arity, std::move(terms));
  } catch (const json::exception& ex) {
    throw ParseError(std::string("polynomial JSON: ") + ex.what());
  }
}

template <ExactField K>
json to_json(const Matrix<K>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <ExactField K>
Matrix<K> matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("matrix JSON must be a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  Matrix<K> m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols) throw ParseError("ragged matrix JSON");
    for (int c = 0; c < cols; ++c) m(i, c) = scalar_from_json<K>(j[i][c]);
  }
  return m;
}

}  // namespace pvs
