#include "pendlab/theta.hpp"

#include <stdexcept>
#include <vector>

namespace pendlab {

void ThetaSpecialization::validate() const {
  if ((sign_a != 1 && sign_a != -1) || (sign_b != 1 && sign_b != -1)) {
    throw std::invalid_argument("theta: signs must be +1 or -1");
  }
  if (exp_a < 1 || exp_b < 1) throw std::invalid_argument("theta: exponents must be positive");
}

Series phi(std::size_t order, Backend backend) {
  std::vector<std::int64_t> c(order, 0);
  if (order > 0) c[0] = 1;
  for (std::size_t n = 1; n * n < order; ++n) c[n * n] = 2;
  return Series::from_integers(c, backend);
}

Series psi(std::size_t order, Backend backend) {
  std::vector<std::int64_t> c(order, 0);
  for (std::size_t n = 0; n * (n + 1) / 2 < order; ++n) c[n * (n + 1) / 2] = 1;
  return Series::from_integers(c, backend);
}

Series theta_sum(const ThetaSpecialization& spec, std::size_t order) {
  spec.validate();
  std::vector<std::int64_t> c(order, 0);
  // Both directions have strictly growing q-order once |n| >= 1, so each
  // walk stops at the first term past the truncation.
  auto accumulate = [&](std::int64_t n) {
    const std::int64_t ta = n * (n + 1) / 2;
    const std::int64_t tb = n * (n - 1) / 2;
    const std::int64_t exponent = static_cast<std::int64_t>(spec.exp_a) * ta + static_cast<std::int64_t>(spec.exp_b) * tb;
    if (exponent >= static_cast<std::int64_t>(order)) return false;
    std::int64_t sign = 1;
    if (spec.sign_a < 0 && ta % 2 != 0) sign = -sign;
    if (spec.sign_b < 0 && tb % 2 != 0) sign = -sign;
    c[static_cast<std::size_t>(exponent)] += sign;
    return true;
  };
  accumulate(0);
  for (std::int64_t n = 1; accumulate(n); ++n) {
  }
  for (std::int64_t n = -1; accumulate(n); --n) {
  }
  return Series::from_integers(c, Backend::exact());
}

Series triple_product(const ThetaSpecialization& spec, std::size_t order) {
  spec.validate();
  const std::size_t step = spec.exp_a + spec.exp_b;
  const int sign_ab = spec.sign_a * spec.sign_b;
  Series result = Series::one(Backend::exact(), order);
  // Multiplies by (1 + c q^d).
  auto times_binomial = [&](std::int64_t c, std::size_t d) {
    if (d >= order) return false;
    const SparseTerm factor[] = {{0, 1}, {d, c}};
    result = mul_sparse(result, factor);
    return true;
  };
  // (ab)^n alternates sign with n when ab carries a minus sign.
  auto power_sign = [&](std::size_t n) { return (sign_ab < 0 && n % 2 == 1) ? -1 : 1; };
  for (std::size_t n = 0;; ++n) {
    if (!times_binomial(spec.sign_a * power_sign(n), spec.exp_a + n * step)) break;
  }
  for (std::size_t n = 0;; ++n) {
    if (!times_binomial(spec.sign_b * power_sign(n), spec.exp_b + n * step)) break;
  }
  for (std::size_t n = 1;; ++n) {
    if (!times_binomial(-power_sign(n), n * step)) break;
  }
  return result;
}

JtpResult jtp_check(const ThetaSpecialization& spec, std::size_t order) {
  const Series sum = theta_sum(spec, order);
  const Series product = triple_product(spec, order);
  const auto lhs = sum.exact_coefficients();
  const auto rhs = product.exact_coefficients();
  for (std::size_t i = 0; i < order; ++i) {
    if (lhs[i] != rhs[i]) return {false, i};
  }
  return {true, std::nullopt};
}

}  // namespace pendlab
