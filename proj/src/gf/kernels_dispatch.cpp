#include <atomic>

#include "fpd/gf/kernels.hpp"

namespace fpd::gf::kernels {
namespace {

std::atomic<bool> g_force_scalar{false};

bool cpu_has_avx2() {
#if defined(FPD_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

const RowOps& scalar_ops() {
  static const RowOps ops{Isa::kScalar, &detail::axpy_scalar, &detail::scale_scalar,
                          kModulusLimit};
  return ops;
}

const RowOps* avx2_ops() {
#if defined(FPD_HAVE_AVX2)
  static const RowOps ops{Isa::kAvx2, &detail::axpy_avx2, &detail::scale_avx2,
                          std::uint64_t{1} << 26};
  static const bool available = cpu_has_avx2();
  return available ? &ops : nullptr;
#else
  return nullptr;
#endif
}

const RowOps& select(Elem p) {
  if (!g_force_scalar.load(std::memory_order_relaxed)) {
    if (const RowOps* v = avx2_ops(); v != nullptr && p < v->modulus_limit) return *v;
  }
  return scalar_ops();
}

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

}  // namespace fpd::gf::kernels
