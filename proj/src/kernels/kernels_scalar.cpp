#include "pendlab/kernels.hpp"

namespace pendlab::kernels {
namespace {

void xor_extract_scalar(std::span<std::uint64_t> dst, const std::uint64_t* src,
                        std::size_t src_bit) noexcept {
  const std::size_t base = src_bit / 64;
  const unsigned shift = src_bit % 64;
  if (shift == 0) {
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[base + w];
    return;
  }
  for (std::size_t w = 0; w < dst.size(); ++w) {
    dst[w] ^= (src[base + w] >> shift) | (src[base + w + 1] << (64 - shift));
  }
}

void mod_add_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                    std::uint64_t m) noexcept {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    std::uint64_t s = dst[i] + src[i];
    dst[i] = s >= m ? s - m : s;
  }
}

void mod_sub_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                    std::uint64_t m) noexcept {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = dst[i] >= src[i] ? dst[i] - src[i] : dst[i] + (m - src[i]);
  }
}

}  // namespace

void mod_axpy_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                     std::uint64_t c, std::uint64_t m) noexcept {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const unsigned __int128 t = static_cast<unsigned __int128>(c) * src[i] + dst[i];
    dst[i] = static_cast<std::uint64_t>(t % m);
  }
}

const KernelSet& scalar() noexcept {
  static constexpr KernelSet set{"scalar", xor_extract_scalar, mod_add_scalar, mod_sub_scalar,
                                 mod_axpy_scalar};
  return set;
}

}  // namespace pendlab::kernels
