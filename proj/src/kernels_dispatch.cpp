#include "pvs/kernels.hpp"

#include "pvs/rational.hpp"

#include <cstdlib>

namespace pvs::kernels {

bool available(Kind k) {
  switch (k) {
    case Kind::Scalar:
      return true;
    case Kind::Avx2:
#if defined(PVS_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Kind::Neon:
#if defined(PVS_HAVE_NEON_KERNEL)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Kind parse_kind(const std::string& s) {
  if (s == "scalar") return Kind::Scalar;
  if (s == "avx2") return Kind::Avx2;
  if (s == "neon") return Kind::Neon;
  throw Error("unknown kernel '" + s + "' (expected scalar, avx2 or neon)");
}

Kind select() {
  if (const char* env = std::getenv("PVS_KERNEL"); env && *env) {
    const Kind k = parse_kind(env);
    if (!available(k)) throw Error(std::string("PVS_KERNEL=") + env + " is not available on this machine");
    return k;
  }
  if (available(Kind::Avx2)) return Kind::Avx2;
  if (available(Kind::Neon)) return Kind::Neon;
  return Kind::Scalar;
}

BatchFn function(Kind k) {
  if (!available(k)) throw Error(std::string("kernel ") + name(k) + " is not available");
  switch (k) {
#if defined(PVS_HAVE_AVX2_KERNEL)
    case Kind::Avx2:
      return &eval_avx2;
#endif
#if defined(PVS_HAVE_NEON_KERNEL)
    case Kind::Neon:
      return &eval_neon;
#endif
    default:
      return &eval_scalar;
  }
}

const char* name(Kind k) {
  switch (k) {
    case Kind::Scalar: return "scalar";
    case Kind::Avx2: return "avx2";
    case Kind::Neon: return "neon";
  }
  return "?";
}

std::vector<Kind> available_kinds() {
  std::vector<Kind> out;
  for (Kind k : {Kind::Scalar, Kind::Avx2, Kind::Neon})
    if (available(k)) out.push_back(k);
  return out;
}

}  // namespace pvs::kernels
