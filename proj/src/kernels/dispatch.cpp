#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace pendlab::kernels {

const KernelSet* avx2() noexcept {
#if defined(PENDLAB_BUILD_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_set() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet* neon() noexcept {
#if defined(PENDLAB_BUILD_NEON)
  return &neon_set();  // baseline on AArch64
#else
  return nullptr;
#endif
}

std::vector<const KernelSet*> available() {
  std::vector<const KernelSet*> sets{&scalar()};
  if (const KernelSet* k = avx2()) sets.push_back(k);
  if (const KernelSet* k = neon()) sets.push_back(k);
  return sets;
}

namespace {

const KernelSet& select() {
  const char* env = std::getenv("PENDLAB_KERNELS");
  const std::string wanted = env ? env : "auto";
  if (wanted == "scalar") return scalar();
  if (wanted == "auto" || wanted.empty()) {
    if (const KernelSet* k = avx2()) return *k;
    if (const KernelSet* k = neon()) return *k;
    return scalar();
  }
  for (const KernelSet* k : available()) {
    if (k->name == wanted) return *k;
  }
  throw std::runtime_error("PENDLAB_KERNELS=" + wanted + " is not available on this machine");
}

}  // namespace

const KernelSet& active() {
  static const KernelSet& chosen = select();
  return chosen;
}

}  // namespace pendlab::kernels
