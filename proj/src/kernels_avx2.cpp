#include "pvs/kernels.hpp"

#include <immintrin.h>

namespace pvs::kernels {

void eval_avx2(const FormTables& t, const double* v, std::size_t n, double* q, double* f) {
  const std::size_t body = n - n % 4;
  for (std::size_t j = 0; j < body; j += 4) {
    __m256d x[8];
    for (int c = 0; c < 8; ++c) x[c] = _mm256_loadu_pd(v + c * n + j);
    __m256d y[8];
    for (int r = 0; r < 8; ++r) {
      __m256d acc = _mm256_mul_pd(_mm256_set1_pd(t.g[r * 8]), x[0]);
      for (int c = 1; c < 8; ++c) acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(t.g[r * 8 + c]), x[c]));
      y[r] = acc;
    }
    __m256d qs = _mm256_setzero_pd();
    for (const QuadTerm& m : t.quad)
      qs = _mm256_add_pd(qs, _mm256_mul_pd(_mm256_set1_pd(m.c), _mm256_mul_pd(y[m.a], y[m.b])));
    __m256d fs = _mm256_setzero_pd();
    for (const CubicTerm& m : t.cubic)
      fs = _mm256_add_pd(fs, _mm256_mul_pd(_mm256_set1_pd(m.coef), _mm256_mul_pd(_mm256_mul_pd(y[m.a], y[m.b]), y[m.c])));
    _mm256_storeu_pd(q + j, qs);
    _mm256_storeu_pd(f + j, fs);
  }
  if (body == n) return;
  // Tail: repack the remaining columns so the scalar kernel sees a dense SoA block.
  const std::size_t rest = n - body;
  double tail[8 * 3];
  for (int c = 0; c < 8; ++c)
    for (std::size_t j = 0; j < rest; ++j) tail[c * rest + j] = v[c * n + body + j];
  eval_scalar(t, tail, rest, q + body, f + body);
}

}  // namespace pvs::kernels
