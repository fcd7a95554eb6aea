#include <gtest/gtest.h>

#include "pendlab/eta.hpp"
#include "pendlab/theta.hpp"

namespace pendlab {
namespace {

TEST(Theta, PhiAndPsiCoefficients) {
  EXPECT_EQ(phi(10), Series::from_integers(std::vector<std::int64_t>{1, 2, 0, 0, 2, 0, 0, 0, 0, 2}));
  EXPECT_EQ(psi(11), Series::from_integers(std::vector<std::int64_t>{1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}));
}

TEST(Theta, ProductFormsOfClassicalFunctions) {
  const std::size_t order = 800;
  // phi(q) = f2^5 / (f1^2 f4^2), psi(q) = f2^2 / f1, f(-q) = f1.
  EXPECT_EQ(phi(order), expand_quotient(EtaQuotient{{2, 5}, {1, -2}, {4, -2}}, order));
  EXPECT_EQ(psi(order), expand_quotient(EtaQuotient{{2, 2}, {1, -1}}, order));
  EXPECT_EQ(theta_sum(kEulerSpecialization, order), eta_series(1, order));
}

TEST(Theta, TripleProductHoldsForClassicalSpecializations) {
  for (const ThetaSpecialization& s : {kPhiSpecialization, kPsiSpecialization, kEulerSpecialization}) {
    const JtpResult r = jtp_check(s, 300);
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.first_mismatch.has_value());
  }
  EXPECT_TRUE(jtp_check({-1, 2, 1, 5}, 300));
}

TEST(Theta, ThetaSumOfPhiSpecializationIsPhi) {
  EXPECT_EQ(theta_sum(kPhiSpecialization, 400), phi(400));
}

TEST(Theta, InvalidSpecializationRejected) {
  EXPECT_THROW(theta_sum({1, 0, 1, 1}, 10), std::invalid_argument);
  EXPECT_THROW(triple_product({2, 1, 1, 1}, 10), std::invalid_argument);
  EXPECT_THROW(jtp_check({1, 1, 0, 1}, 10), std::invalid_argument);
}

}  // namespace
}  // namespace pendlab
