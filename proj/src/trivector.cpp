#include "pvs/trivector.hpp"

namespace pvs {

namespace {

QTrivector make(std::initializer_list<std::tuple<int, int, int, long>> terms, long scale = 1) {
  QTrivector x;
  for (const auto& [i, j, k, c] : terms) x.add(i, j, k, Rational(c * scale));
  return x;
}

}  // namespace

QTrivector builtin_w() {
  // e123 + e456 + e7^(e14 - e25) + e8^(e14 - e36)
  return make({{1, 2, 3, 1}, {4, 5, 6, 1}, {7, 1, 4, 1}, {7, 2, 5, -1}, {8, 1, 4, 1}, {8, 3, 6, -1}});
}

QTrivector builtin_wprime() {
  return make({{1, 2, 3, 1}, {1, 5, 6, 1}, {2, 4, 6, 1}, {7, 1, 4, 1}, {7, 2, 5, -1}, {8, 1, 4, 1}, {8, 3, 6, -1}});
}

QTrivector builtin_w1() {
  return make({{1, 2, 3, 1}, {1, 5, 6, -1}, {2, 4, 6, 1}, {3, 4, 5, -1},
               {7, 1, 4, 1}, {7, 2, 5, 1}, {8, 1, 4, 1}, {8, 3, 6, 1}},
              2);
}

QTrivector builtin_w2() {
  return make({{1, 2, 3, 1}, {1, 5, 6, -1}, {2, 4, 6, 1}, {3, 4, 5, -1},
               {7, 1, 4, 1}, {7, 2, 5, -1}, {8, 1, 4, 1}, {8, 3, 6, -1}},
              2);
}

GroupElement<Rational> builtin_tau() {
  QMatrix g(kDim, kDim);
  for (int i = 0; i < 3; ++i) {
    g(i, i + 3) = 1;
    g(i + 3, i) = 1;
  }
  g(6, 6) = -1;
  g(7, 7) = -1;
  return {Rational(1), g};
}

QTrivector builtin_trivector(const std::string& name) {
  if (name == "w") return builtin_w();
  if (name == "wprime") return builtin_wprime();
  if (name == "w1") return builtin_w1();
  if (name == "w2") return builtin_w2();
  throw Error("unknown built-in trivector '" + name + "' (known: w, wprime, w1, w2)");
}

}  // namespace pvs
