#include <gtest/gtest.h>

#include <random>

#include "pendlab/kernels.hpp"

namespace pendlab::kernels {
namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> v(n);
  for (auto& w : v) w = rng();
  return v;
}

std::vector<std::uint64_t> random_residues(std::mt19937_64& rng, std::size_t n, std::uint64_t m) {
  std::uniform_int_distribution<std::uint64_t> dist(0, m - 1);
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

TEST(KernelDispatch, ScalarAlwaysAvailableAndFirst) {
  const auto sets = available();
  ASSERT_FALSE(sets.empty());
  EXPECT_EQ(sets.front()->name, "scalar");
  EXPECT_FALSE(active().name.empty());
}

TEST(KernelEquivalence, XorExtractMatchesScalarAcrossOffsets) {
  std::mt19937_64 rng(7);
  const auto src = random_words(rng, 80);
  for (const KernelSet* k : available()) {
    for (std::size_t len : {0U, 1U, 3U, 4U, 5U, 17U, 64U}) {
      for (std::size_t bit : {0U, 1U, 31U, 63U, 64U, 65U, 200U, 511U}) {
        auto expected = random_words(rng, len);
        auto got = expected;
        scalar().xor_extract(expected, src.data(), bit);
        k->xor_extract(got, src.data(), bit);
        EXPECT_EQ(got, expected) << k->name << " len=" << len << " bit=" << bit;
      }
    }
  }
}

TEST(KernelScalar, XorExtractReadsTheRequestedBits) {
  const std::vector<std::uint64_t> src{0xF0F0F0F0F0F0F0F0ULL, 0x0123456789ABCDEFULL};
  std::vector<std::uint64_t> dst{0};
  scalar().xor_extract(dst, src.data(), 4);
  EXPECT_EQ(dst[0], (src[0] >> 4) | (src[1] << 60));
}

TEST(KernelEquivalence, ModularAddSubAgreeForLargeAndSmallModuli) {
  std::mt19937_64 rng(11);
  for (std::uint64_t m : {2ULL, 3ULL, 1000003ULL, (1ULL << 61) - 1, 1ULL << 62}) {
    for (std::size_t len : {0U, 1U, 7U, 64U, 129U}) {
      const auto a = random_residues(rng, len, m);
      const auto b = random_residues(rng, len, m);
      for (const KernelSet* k : available()) {
        auto add_ref = a, add_got = a, sub_ref = a, sub_got = a;
        scalar().mod_add(add_ref, b, m);
        k->mod_add(add_got, b, m);
        scalar().mod_sub(sub_ref, b, m);
        k->mod_sub(sub_got, b, m);
        EXPECT_EQ(add_got, add_ref) << k->name << " m=" << m;
        EXPECT_EQ(sub_got, sub_ref) << k->name << " m=" << m;
      }
    }
  }
}

TEST(KernelScalar, ModularOpsMatchWideArithmetic) {
  std::mt19937_64 rng(13);
  const std::uint64_t m = (1ULL << 62) - 57;
  const auto a = random_residues(rng, 50, m);
  const auto b = random_residues(rng, 50, m);
  auto add = a, sub = a, axpy = a;
  scalar().mod_add(add, b, m);
  scalar().mod_sub(sub, b, m);
  scalar().mod_axpy(axpy, b, 123456789, m);
  for (std::size_t i = 0; i < a.size(); ++i) {
    using W = unsigned __int128;
    EXPECT_EQ(add[i], static_cast<std::uint64_t>((W(a[i]) + b[i]) % m));
    EXPECT_EQ(sub[i], static_cast<std::uint64_t>((W(a[i]) + m - b[i]) % m));
    EXPECT_EQ(axpy[i], static_cast<std::uint64_t>((W(a[i]) + W(123456789) * b[i]) % m));
  }
}

TEST(KernelEquivalence, AxpyAgrees) {
  std::mt19937_64 rng(17);
  const std::uint64_t m = 998244353;
  const auto a = random_residues(rng, 33, m);
  const auto b = random_residues(rng, 33, m);
  for (const KernelSet* k : available()) {
    auto ref = a, got = a;
    scalar().mod_axpy(ref, b, 5, m);
    k->mod_axpy(got, b, 5, m);
    EXPECT_EQ(got, ref) << k->name;
  }
}

}  // namespace
}  // namespace pendlab::kernels
