#include "pvs/kernels.hpp"

#include <arm_neon.h>

namespace pvs::kernels {

void eval_neon(const FormTables& t, const double* v, std::size_t n, double* q, double* f) {
  const std::size_t body = n - n % 2;
  for (std::size_t j = 0; j < body; j += 2) {
    float64x2_t x[8];
    for (int c = 0; c < 8; ++c) x[c] = vld1q_f64(v + c * n + j);
    float64x2_t y[8];
    for (int r = 0; r < 8; ++r) {
      float64x2_t acc = vmulq_f64(vdupq_n_f64(t.g[r * 8]), x[0]);
      for (int c = 1; c < 8; ++c) acc = vaddq_f64(acc, vmulq_f64(vdupq_n_f64(t.g[r * 8 + c]), x[c]));
      y[r] = acc;
    }
    float64x2_t qs = vdupq_n_f64(0.0);
    for (const QuadTerm& m : t.quad) qs = vaddq_f64(qs, vmulq_f64(vdupq_n_f64(m.c), vmulq_f64(y[m.a], y[m.b])));
    float64x2_t fs = vdupq_n_f64(0.0);
    for (const CubicTerm& m : t.cubic)
      fs = vaddq_f64(fs, vmulq_f64(vdupq_n_f64(m.coef), vmulq_f64(vmulq_f64(y[m.a], y[m.b]), y[m.c])));
    vst1q_f64(q + j, qs);
    vst1q_f64(f + j, fs);
  }
  if (body == n) return;
  double tail[8];
  for (int c = 0; c < 8; ++c) tail[c] = v[c * n + body];
  eval_scalar(t, tail, 1, q + body, f + body);
}

}  // namespace pvs::kernels
