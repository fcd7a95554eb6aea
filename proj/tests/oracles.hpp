#pragma once

// Test-only reference computations. Each one reaches its answer by a route
// that shares no code with the library path it is compared against.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace pendlab::oracle {

using Poly = std::vector<mpz_class>;

// Dense schoolbook product truncated to `order` terms.
inline Poly convolve(const Poly& a, const Poly& b, std::size_t order) {
  Poly r(order);
  for (std::size_t i = 0; i < a.size() && i < order; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < order; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// prod_{n >= 1} (1 - q^{kn}) by multiplying binomials one at a time.
inline Poly naive_euler_product(std::uint64_t k, std::size_t order) {
  Poly r(order);
  r[0] = 1;
  for (std::size_t step = k; step < order; step += k) {
    for (std::size_t i = order; i-- > step;) r[i] -= r[i - step];
  }
  return r;
}

// Number of partitions of n whose parts come in `colors` colours, i.e.
// [q^n] 1/f1^colors, by the coin-change recurrence.
inline Poly colored_partition_counts(unsigned colors, std::size_t order) {
  Poly r(order);
  r[0] = 1;
  for (unsigned c = 0; c < colors; ++c) {
    for (std::size_t part = 1; part < order; ++part) {
      for (std::size_t i = part; i < order; ++i) r[i] += r[i - part];
    }
  }
  return r;
}

// pend(n) straight from its combinatorial rule: odd parts with any
// multiplicity, even parts with multiplicity 0 or >= 2.
inline Poly pend_by_multiplicities(std::size_t order) {
  Poly r(order);
  r[0] = 1;
  for (std::size_t part = 1; part < order; ++part) {
    Poly next(order);
    for (std::size_t i = 0; i < order; ++i) {
      if (r[i] == 0) continue;
      for (std::size_t m = 0; i + m * part < order; ++m) {
        if (part % 2 == 0 && m == 1) continue;
        next[i + m * part] += r[i];
      }
    }
    r = std::move(next);
  }
  return r;
}

// a(n) = [q^n] f3^2 / f1^3 as (three-coloured partitions) x (naive f3)^2.
inline Poly a_coefficients(std::size_t order) {
  const Poly f3 = naive_euler_product(3, order);
  return convolve(convolve(f3, f3, order), colored_partition_counts(3, order), order);
}

}  // namespace pendlab::oracle
