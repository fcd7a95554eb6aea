#include <gtest/gtest.h>

#include "pendlab/newman.hpp"
#include "pendlab/number_theory.hpp"
#include "pendlab/partitions.hpp"

namespace pendlab {
namespace {

const Series& exact_a() {
  static const Series table = a_table(6000).values;
  return table;
}

TEST(NumberTheory, LegendreByEulerCriterion) {
  EXPECT_EQ(legendre(2, 7), 1);
  EXPECT_EQ(legendre(3, 7), -1);
  EXPECT_EQ(legendre(14, 7), 0);
  EXPECT_EQ(legendre(-1, 5), 1);
  EXPECT_EQ(legendre(-1, 7), -1);
  EXPECT_EQ(legendre(-2, 11), 1);
  EXPECT_THROW(legendre(1, 9), std::invalid_argument);
  EXPECT_THROW(legendre(1, 2), std::invalid_argument);
}

TEST(NumberTheory, PrimesAndPowers) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime((1ULL << 61) - 1));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(pow_mod(3, 200, 1000003), pow_mod(9, 100, 1000003));
  EXPECT_EQ(pow_mod(5, 0, 1), 0U);
  const auto primes = random_primes(3, 60, 42);
  ASSERT_EQ(primes.size(), 3U);
  EXPECT_EQ(primes, random_primes(3, 60, 42));
  for (std::uint64_t q : primes) {
    EXPECT_TRUE(is_prime(q));
    EXPECT_EQ(q >> 59, 1U);
  }
}

TEST(NewmanParams, DerivedQuantities) {
  const NewmanParams p5 = NewmanParams::pend_instance(5);
  EXPECT_EQ(p5.delta(), 3U);
  EXPECT_EQ(p5.t_numerator(), 3);
  EXPECT_EQ(p5.twice_epsilon(), -1);
  EXPECT_EQ(p5.theta_sign(), -1);
  EXPECT_TRUE(p5.is_pend_instance());
  EXPECT_EQ(NewmanParams::pend_instance(13).delta(), 21U);
  EXPECT_THROW(NewmanParams::make(-3, 2, 3, 3), std::invalid_argument);
  EXPECT_THROW(NewmanParams::make(-3, 3, 3, 5), std::invalid_argument);
  EXPECT_THROW(NewmanParams::make(-3, 2, 4, 5), std::invalid_argument);
  EXPECT_THROW(NewmanParams::make(-3, 2, 3, 9), std::invalid_argument);
}

TEST(NewmanAlpha, ClosedFormMatchesFit) {
  const std::pair<std::uint64_t, long> expected[] = {{5, 2505}, {7, 60361}, {11, 25065381}, {13, 478264943}};
  for (const auto& [p, alpha] : expected) {
    const AlphaFit fit = fit_alpha(p, exact_a());
    EXPECT_EQ(fit.alpha, alpha) << p;
    EXPECT_EQ(fit.fitted_alpha, alpha) << p;
  }
  EXPECT_THROW(fit_alpha(5, a_table(8, Backend::parity()).values), BackendMismatch);
  EXPECT_THROW(fit_alpha(13, a_table(10).values), InsufficientOrder);
}

// Frozen values from an independent big-integer computation.
TEST(NewmanResidual, FrozenValues) {
  EXPECT_EQ(newman_residual(5, 0, exact_a(), 2505), 0);
  EXPECT_EQ(newman_residual(5, 1, exact_a(), 2505), 328961250);
  EXPECT_EQ(newman_residual(5, 2, exact_a(), 2505), BigInt("422054488035"));
  EXPECT_EQ(newman_residual(7, 1, exact_a(), 60361), BigInt("1902403084554"));
  EXPECT_EQ(newman_step3_residual(5, 0, exact_a(), 2505), BigInt("125451962893026"));
}

TEST(NewmanResidual, ModularTableGivesReducedResidual) {
  const std::uint64_t m = 1000000007;
  const Series reduced = reduce(exact_a(), m);
  for (std::uint64_t n = 0; n < 10; ++n) {
    BigInt exact = newman_residual(5, n, exact_a(), 2505);
    mpz_fdiv_r_ui(exact.get_mpz_t(), exact.get_mpz_t(), m);
    EXPECT_EQ(newman_residual(5, n, reduced, 2505), exact) << n;
  }
}

TEST(NewmanResidual, OrderRequirements) {
  EXPECT_EQ(newman_required_order(5, 200), 5004U);
  EXPECT_THROW(newman_residual(5, 300, exact_a(), 2505), InsufficientOrder);
  EXPECT_THROW(scan_residuals(Relation::three_term, 5, 300, exact_a(), 2505), InsufficientOrder);
}

TEST(NewmanScan, CollectsNonzeroResidualsInOrder) {
  const ResidualScan scan = scan_residuals(Relation::three_term, 5, 20, exact_a(), 2505);
  EXPECT_EQ(scan.checked, 21U);
  ASSERT_FALSE(scan.nonzero.empty());
  EXPECT_EQ(scan.nonzero.front().first, 1U);
  EXPECT_FALSE(scan.vanishes());
  for (std::size_t i = 1; i < scan.nonzero.size(); ++i) EXPECT_LT(scan.nonzero[i - 1].first, scan.nonzero[i].first);
}

}  // namespace
}  // namespace pendlab
