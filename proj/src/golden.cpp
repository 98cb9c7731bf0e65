#include "pvs/golden.hpp"

#include <cctype>

namespace pvs {

namespace {

using Table = std::array<std::array<const char*, kDim>, kDim>;

constexpr Table kSw = {{
    {"0", "3f6", "3f5", "3f7-3f8", "0", "0", "-f1", "f1"},
    {"3f6", "0", "3f4", "0", "3f8", "0", "-f2", "-2f2"},
    {"3f5", "3f4", "0", "0", "0", "-3f7", "2f3", "f3"},
    {"3f7-3f8", "0", "0", "0", "-3f3", "-3f2", "-f4", "f4"},
    {"0", "3f8", "0", "-3f3", "0", "-3f1", "-f5", "-2f5"},
    {"0", "0", "-3f7", "-3f2", "-3f1", "0", "2f6", "f6"},
    {"-f1", "-f2", "2f3", "-f4", "-f5", "2f6", "-2f7", "2f8-2f7"},
    {"f1", "-2f2", "f3", "f4", "-2f5", "f6", "2f8-2f7", "2f8"},
}};

constexpr Table kSwPrime = {{
    {"6f7-6f8", "3f6", "3f5", "0", "-3f3", "-3f2", "-f1", "f1"},
    {"3f6", "-6f8", "3f4", "3f3", "0", "3f1", "-f2", "-2f2"},
    {"3f5", "3f4", "0", "0", "0", "0", "2f3", "f3"},
    {"0", "3f3", "0", "0", "0", "-3f5", "-f4", "f4"},
    {"-3f3", "0", "0", "0", "0", "3f4", "-f5", "-2f5"},
    {"-3f2", "3f1", "0", "-3f5", "3f4", "-6f7", "2f6", "f6"},
    {"-f1", "-f2", "2f3", "-f4", "-f5", "2f6", "-2f7", "2f8-2f7"},
    {"f1", "-2f2", "f3", "f4", "-2f5", "f6", "2f8-2f7", "2f8"},
}};

SMatrix<Rational> from_table(const Table& t) {
  SMatrix<Rational> s;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) s(i, j) = parse_covector(t[i][j]);
  return s;
}

}  // namespace

SMatrix<Rational>::Covector parse_covector(const std::string& text) {
  SMatrix<Rational>::Covector cv{};
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "0") return cv;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') sign = s[pos++] == '-' ? -1 : 1;
    const std::size_t f = s.find('f', pos);
    if (f == std::string::npos || f + 1 >= s.size()) throw ParseError("malformed covector: " + text);
    const std::string coef = s.substr(pos, f - pos);
    Rational c = coef.empty() ? Rational(1) : Rational::parse(coef);
    std::size_t end = f + 1;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    const int k = std::stoi(s.substr(f + 1, end - f - 1));
    if (k < 1 || k > kDim) throw ParseError("covector index out of range: " + text);
    cv[k - 1] += sign > 0 ? c : -c;
    pos = end;
  }
  return cv;
}

SMatrix<Rational> golden_s_matrix(const std::string& name) {
  if (name == "w") return from_table(kSw);
  if (name == "wprime") return from_table(kSwPrime);
  throw Error("no reference S matrix for '" + name + "'");
}

QMatrix golden_ad_table(const std::vector<Rational>& v) {
  if (v.size() != kDim) throw DimensionMismatch("golden_ad_table expects an 8-vector");
  const Rational a1 = v[6] + v[7], a2 = Rational(-2) * v[6] + v[7], a3 = -a1 - a2;
  const Rational b1 = -v[0], b2 = -v[1], b3 = v[2];
  const Rational g1 = v[3], g2 = v[4], g3 = -v[5];
  const Rational z(0), two(2);
  return QMatrix{
      {a1, z, z, z, g3, g2, b1, b1},
      {z, a2, z, -g3, z, -g1, -two * b2, b2},
      {z, z, a3, -g2, g1, z, -b3, two * b3},
      {z, -b3, -b2, -a1, z, z, g1, g1},
      {b3, z, b1, z, -a2, z, -two * g2, g2},
      {b2, -b1, z, z, z, -a3, -g3, two * g3},
      {g1, -g2, z, b1, -b2, z, z, z},
      {g1, z, g3, b1, z, b3, z, z},
  };
}

}  // namespace pvs
