#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace pendlab::kernels {
namespace {

void xor_extract_neon(std::span<std::uint64_t> dst, const std::uint64_t* src,
                      std::size_t src_bit) noexcept {
  const std::size_t base = src_bit / 64;
  const int shift = static_cast<int>(src_bit % 64);
  const std::size_t n = dst.size();
  const std::size_t vec_end = n & ~std::size_t{1};
  std::size_t w = 0;
  if (shift == 0) {
    for (; w < vec_end; w += 2) {
      vst1q_u64(dst.data() + w, veorq_u64(vld1q_u64(dst.data() + w), vld1q_u64(src + base + w)));
    }
    for (; w < n; ++w) dst[w] ^= src[base + w];
    return;
  }
  const int64x2_t right = vdupq_n_s64(-shift);
  const int64x2_t left = vdupq_n_s64(64 - shift);
  for (; w < vec_end; w += 2) {
    const uint64x2_t lo = vshlq_u64(vld1q_u64(src + base + w), right);
    const uint64x2_t hi = vshlq_u64(vld1q_u64(src + base + w + 1), left);
    vst1q_u64(dst.data() + w, veorq_u64(vld1q_u64(dst.data() + w), vorrq_u64(lo, hi)));
  }
  for (; w < n; ++w) {
    dst[w] ^= (src[base + w] >> shift) | (src[base + w + 1] << (64 - shift));
  }
}

void mod_add_neon(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                  std::uint64_t m) noexcept {
  const std::size_t n = dst.size();
  const std::size_t vec_end = n & ~std::size_t{1};
  const uint64x2_t mod = vdupq_n_u64(m);
  std::size_t i = 0;
  for (; i < vec_end; i += 2) {
    const uint64x2_t s = vaddq_u64(vld1q_u64(dst.data() + i), vld1q_u64(src.data() + i));
    const uint64x2_t over = vcgeq_u64(s, mod);
    vst1q_u64(dst.data() + i, vsubq_u64(s, vandq_u64(over, mod)));
  }
  for (; i < n; ++i) {
    std::uint64_t s = dst[i] + src[i];
    dst[i] = s >= m ? s - m : s;
  }
}

void mod_sub_neon(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                  std::uint64_t m) noexcept {
  const std::size_t n = dst.size();
  const std::size_t vec_end = n & ~std::size_t{1};
  const uint64x2_t mod = vdupq_n_u64(m);
  std::size_t i = 0;
  for (; i < vec_end; i += 2) {
    const uint64x2_t a = vld1q_u64(dst.data() + i);
    const uint64x2_t b = vld1q_u64(src.data() + i);
    const uint64x2_t borrow = vcgtq_u64(b, a);
    vst1q_u64(dst.data() + i, vaddq_u64(vsubq_u64(a, b), vandq_u64(borrow, mod)));
  }
  for (; i < n; ++i) {
    dst[i] = dst[i] >= src[i] ? dst[i] - src[i] : dst[i] + (m - src[i]);
  }
}

}  // namespace

const KernelSet& neon_set() noexcept {
  static constexpr KernelSet set{"neon", xor_extract_neon, mod_add_neon, mod_sub_neon,
                                 mod_axpy_scalar};
  return set;
}

}  // namespace pendlab::kernels
