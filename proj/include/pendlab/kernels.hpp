#pragma once

// Data-parallel inner loops of the series engine.
//
// Every kernel has a scalar reference implementation. SIMD variants (AVX2 on
// x86-64, NEON on AArch64) are compiled into separate translation units and
// picked once at runtime. The choice can be forced with the PENDLAB_KERNELS
// environment variable (`scalar`, `avx2`, `neon`, `auto`).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace pendlab::kernels {

// dst[w] ^= the 64 bits of `src` starting at bit `src_bit + 64*w`.
// `src` must hold at least ceil((src_bit + 64*dst.size()) / 64) words.
using XorExtractFn = void (*)(std::span<std::uint64_t> dst, const std::uint64_t* src,
                              std::size_t src_bit) noexcept;

// Elementwise modular add/sub over equal-length spans. Operands are already
// reduced into [0, m) and m <= 2^62.
using ModAddFn = void (*)(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                          std::uint64_t m) noexcept;
using ModSubFn = ModAddFn;

// dst[i] = (dst[i] + c * src[i]) mod m.
using ModAxpyFn = void (*)(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                           std::uint64_t c, std::uint64_t m) noexcept;

struct KernelSet {
  std::string_view name;
  XorExtractFn xor_extract;
  ModAddFn mod_add;
  ModSubFn mod_sub;
  ModAxpyFn mod_axpy;
};

const KernelSet& scalar() noexcept;

// nullptr when the variant was not built or the CPU lacks the extension.
const KernelSet* avx2() noexcept;
const KernelSet* neon() noexcept;

// All variants usable on this machine, scalar first.
std::vector<const KernelSet*> available();

// Selected once per process.
const KernelSet& active();

}  // namespace pendlab::kernels
