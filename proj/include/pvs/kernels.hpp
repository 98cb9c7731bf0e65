#pragma once

// Batch evaluation of (q, f) = (quadratic, cubic) forms at g v for many integer vectors v.
//
// Every kernel performs the same operations in the same order without fused
// multiply-add, so all kernels return bit-identical results.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pvs::kernels {

struct QuadTerm {
  int a, b;  ///< 0-based variable indices, a <= b
  double c;
};

struct CubicTerm {
  int a, b, c;
  double coef;
};

struct FormTables {
  double g[64];  ///< row-major 8x8
  std::vector<QuadTerm> quad;
  std::vector<CubicTerm> cubic;
};

/// SoA input: coordinate k of vector j is v[k * n + j].
using BatchFn = void (*)(const FormTables& t, const double* v, std::size_t n, double* q, double* f);

enum class Kind { Scalar, Avx2, Neon };

void eval_scalar(const FormTables& t, const double* v, std::size_t n, double* q, double* f);
#if defined(PVS_HAVE_AVX2_KERNEL)
void eval_avx2(const FormTables& t, const double* v, std::size_t n, double* q, double* f);
#endif
#if defined(PVS_HAVE_NEON_KERNEL)
void eval_neon(const FormTables& t, const double* v, std::size_t n, double* q, double* f);
#endif

/// Compiled in and supported by this CPU.
bool available(Kind k);
/// PVS_KERNEL=scalar|avx2|neon overrides; otherwise the widest available kernel.
Kind select();
BatchFn function(Kind k);
const char* name(Kind k);
Kind parse_kind(const std::string& s);
std::vector<Kind> available_kinds();

}  // namespace pvs::kernels
