// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace pendlab::kernels {
namespace {

void xor_extract_avx2(std::span<std::uint64_t> dst, const std::uint64_t* src,
                      std::size_t src_bit) noexcept {
  const std::size_t base = src_bit / 64;
  const unsigned shift = src_bit % 64;
  const std::size_t n = dst.size();
  const std::size_t vec_end = n & ~std::size_t{3};
  std::size_t w = 0;
  if (shift == 0) {
    for (; w < vec_end; w += 4) {
      const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + base + w));
      __m256i* d = reinterpret_cast<__m256i*>(dst.data() + w);
      _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), s));
    }
    for (; w < n; ++w) dst[w] ^= src[base + w];
    return;
  }
  const __m128i lo_count = _mm_cvtsi32_si128(static_cast<int>(shift));
  const __m128i hi_count = _mm_cvtsi32_si128(static_cast<int>(64 - shift));
  for (; w < vec_end; w += 4) {
    const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + base + w));
    const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + base + w + 1));
    const __m256i bits = _mm256_or_si256(_mm256_srl_epi64(lo, lo_count), _mm256_sll_epi64(hi, hi_count));
    __m256i* d = reinterpret_cast<__m256i*>(dst.data() + w);
    _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), bits));
  }
  for (; w < n; ++w) {
    dst[w] ^= (src[base + w] >> shift) | (src[base + w + 1] << (64 - shift));
  }
}

// Residues stay below 2^62, so signed 64-bit compares are exact.
void mod_add_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                  std::uint64_t m) noexcept {
  const std::size_t n = dst.size();
  const std::size_t vec_end = n & ~std::size_t{3};
  const __m256i mod = _mm256_set1_epi64x(static_cast<long long>(m));
  const __m256i mod_minus_one = _mm256_set1_epi64x(static_cast<long long>(m - 1));
  std::size_t i = 0;
  for (; i < vec_end; i += 4) {
    __m256i* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const __m256i s = _mm256_add_epi64(
        _mm256_loadu_si256(d), _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i)));
    const __m256i over = _mm256_cmpgt_epi64(s, mod_minus_one);
    _mm256_storeu_si256(d, _mm256_sub_epi64(s, _mm256_and_si256(over, mod)));
  }
  for (; i < n; ++i) {
    std::uint64_t s = dst[i] + src[i];
    dst[i] = s >= m ? s - m : s;
  }
}

void mod_sub_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                  std::uint64_t m) noexcept {
  const std::size_t n = dst.size();
  const std::size_t vec_end = n & ~std::size_t{3};
  const __m256i mod = _mm256_set1_epi64x(static_cast<long long>(m));
  std::size_t i = 0;
  for (; i < vec_end; i += 4) {
    __m256i* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const __m256i a = _mm256_loadu_si256(d);
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    const __m256i borrow = _mm256_cmpgt_epi64(b, a);
    _mm256_storeu_si256(d, _mm256_add_epi64(_mm256_sub_epi64(a, b), _mm256_and_si256(borrow, mod)));
  }
  for (; i < n; ++i) {
    dst[i] = dst[i] >= src[i] ? dst[i] - src[i] : dst[i] + (m - src[i]);
  }
}

}  // namespace

const KernelSet& avx2_set() noexcept {
  static constexpr KernelSet set{"avx2", xor_extract_avx2, mod_add_avx2, mod_sub_avx2,
                                 mod_axpy_scalar};
  return set;
}

}  // namespace pendlab::kernels
