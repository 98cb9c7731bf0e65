#include "pvs/kernels.hpp"

namespace pvs::kernels {

void eval_scalar(const FormTables& t, const double* v, std::size_t n, double* q, double* f) {
  for (std::size_t j = 0; j < n; ++j) {
    double y[8];
    for (int r = 0; r < 8; ++r) {
      double acc = t.g[r * 8] * v[j];
      for (int c = 1; c < 8; ++c) acc = acc + t.g[r * 8 + c] * v[c * n + j];
      y[r] = acc;
    }
    double qs = 0.0;
    for (const QuadTerm& m : t.quad) qs = qs + m.c * (y[m.a] * y[m.b]);
    double fs = 0.0;
    for (const CubicTerm& m : t.cubic) fs = fs + m.coef * ((y[m.a] * y[m.b]) * y[m.c]);
    q[j] = qs;
    f[j] = fs;
  }
}

}  // namespace pvs::kernels
