#include "fpd/gf/kernels.hpp"

namespace fpd::gf::kernels::detail {

void axpy_scalar(Elem* dst, const Elem* src, Elem c, std::size_t n, Elem p) {
  if (c == 0) return;
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<Elem>((dst[i] + std::uint64_t{c} * src[i]) % p);
}

void scale_scalar(Elem* dst, Elem c, std::size_t n, Elem p) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<Elem>((std::uint64_t{c} * dst[i]) % p);
}

}  // namespace fpd::gf::kernels::detail
