#pragma once

// Ramanujan theta functions as q-series and single-variable checks of the
// Jacobi triple product.

#include <optional>

#include "pendlab/series.hpp"

namespace pendlab {

// f(a, b) with a = sign_a * q^exp_a and b = sign_b * q^exp_b.
struct ThetaSpecialization {
  int sign_a;
  unsigned exp_a;
  int sign_b;
  unsigned exp_b;

  // Throws std::invalid_argument unless signs are +-1 and both exponents >= 1.
  void validate() const;
};

// sum_{n in Z} q^{n^2}: 1 at q^0, 2 at every positive square.
Series phi(std::size_t order, Backend backend = Backend::exact());
// sum_{n >= 0} q^{n(n+1)/2}.
Series psi(std::size_t order, Backend backend = Backend::exact());

// Bilateral sum sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2}, truncated.
Series theta_sum(const ThetaSpecialization& spec, std::size_t order);
// (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf as a product of binomials, truncated.
Series triple_product(const ThetaSpecialization& spec, std::size_t order);

struct JtpResult {
  bool holds;
  std::optional<std::size_t> first_mismatch;  // exponent where the two sides differ
  explicit operator bool() const noexcept { return holds; }
};

JtpResult jtp_check(const ThetaSpecialization& spec, std::size_t order);

inline constexpr ThetaSpecialization kPhiSpecialization{1, 1, 1, 1};       // f(q, q)
inline constexpr ThetaSpecialization kPsiSpecialization{1, 1, 1, 3};       // f(q, q^3)
inline constexpr ThetaSpecialization kEulerSpecialization{-1, 1, -1, 2};   // f(-q, -q^2)

}  // namespace pendlab
