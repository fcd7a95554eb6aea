#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pendlab/partitions.hpp"

namespace pendlab {
namespace {

TEST(Partitions, EnumerationOrderForFour) {
  const std::vector<Partition> expected{{{4}}, {{3, 1}}, {{2, 2}}, {{2, 1, 1}}, {{1, 1, 1, 1}}};
  EXPECT_EQ(enumerate(4), expected);
  EXPECT_EQ(enumerate(0), std::vector<Partition>{Partition{}});
}

TEST(Partitions, CountsAndSums) {
  EXPECT_EQ(enumerate(10).size(), 42U);
  for (const Partition& p : enumerate(12)) EXPECT_EQ(p.sum(), 12U);
  EXPECT_THROW(enumerate(kMaxEnumeration + 1), std::invalid_argument);
}

TEST(Partitions, PendRule) {
  const std::vector<unsigned> ok{3, 2, 2, 1};
  const std::vector<unsigned> bad{4, 1};
  EXPECT_TRUE(is_pend(ok));
  EXPECT_FALSE(is_pend(bad));
  EXPECT_EQ(pend_bruteforce(3), 2U);
  EXPECT_EQ(pend_bruteforce(7), 8U);
}

TEST(Partitions, BruteforceMatchesTableAndOracle) {
  const std::size_t order = 61;
  const CoefficientTable table = pend_table(order);
  const oracle::Poly oracle_values = oracle::pend_by_multiplicities(order);
  for (unsigned n = 0; n < order; ++n) {
    EXPECT_EQ(BigInt(static_cast<unsigned long>(pend_bruteforce(n))), table.values.coefficient(n)) << n;
    EXPECT_EQ(oracle_values[n], table.values.coefficient(n)) << n;
  }
}

TEST(Partitions, TableKinds) {
  EXPECT_EQ(table_kind_from_string("pend"), TableKind::pend);
  EXPECT_EQ(to_string(TableKind::a), "a");
  EXPECT_THROW(table_kind_from_string("q"), std::invalid_argument);
  EXPECT_EQ(partition_table(10).values.coefficient(9), 30);
  const CoefficientTable a = a_table(8);
  EXPECT_EQ(a.values, Series::from_integers(std::vector<std::int64_t>{1, 3, 9, 20, 45, 90, 176, 324}));
  EXPECT_EQ(make_table(TableKind::pend, 8, Backend::parity()).values,
            convert(pend_table(8).values, Backend::parity()));
}

TEST(Partitions, PendIsCongruentToAModTwo) {
  EXPECT_EQ(pend_table(50000, Backend::parity()).values, a_table(50000, Backend::parity()).values);
}

}  // namespace
}  // namespace pendlab
