#pragma once

#include "pendlab/kernels.hpp"

namespace pendlab::kernels {

// No vector path exists for 64x64->128 modular products; SIMD sets reuse it.
void mod_axpy_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                     std::uint64_t c, std::uint64_t m) noexcept;

#if defined(PENDLAB_BUILD_AVX2)
const KernelSet& avx2_set() noexcept;
#endif
#if defined(PENDLAB_BUILD_NEON)
const KernelSet& neon_set() noexcept;
#endif

}  // namespace pendlab::kernels
