#pragma once

// Row kernels for dense F_p linear algebra. A scalar reference
// implementation is always present; vector variants are compiled in
// separate translation units and selected once at runtime.

#include <cstddef>
#include <string_view>

#include "fpd/gf/field.hpp"

namespace fpd::gf::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// dst[i] <- (dst[i] + c * src[i]) mod p. Inputs must be canonical residues.
using AxpyFn = void (*)(Elem* dst, const Elem* src, Elem c, std::size_t n, Elem p);
/// dst[i] <- (c * dst[i]) mod p.
using ScaleFn = void (*)(Elem* dst, Elem c, std::size_t n, Elem p);

struct RowOps {
  Isa isa;
  AxpyFn axpy;
  ScaleFn scale;
  /// Largest modulus (exclusive) this variant handles exactly.
  std::uint64_t modulus_limit;
};

const RowOps& scalar_ops();

/// nullptr when the variant was not built or the CPU lacks the extension.
const RowOps* avx2_ops();

/// Best variant available on this machine for modulus p. Falls back to
/// scalar when p exceeds the variant's exact range.
const RowOps& select(Elem p);

/// Test hook: restrict dispatch to the scalar kernels (true) or restore
/// automatic selection (false).
void force_scalar(bool on);

namespace detail {
void axpy_scalar(Elem* dst, const Elem* src, Elem c, std::size_t n, Elem p);
void scale_scalar(Elem* dst, Elem c, std::size_t n, Elem p);
#if defined(FPD_HAVE_AVX2)
void axpy_avx2(Elem* dst, const Elem* src, Elem c, std::size_t n, Elem p);
void scale_avx2(Elem* dst, Elem c, std::size_t n, Elem p);
#endif
}  // namespace detail

}  // namespace fpd::gf::kernels
