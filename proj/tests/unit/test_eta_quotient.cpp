#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pendlab/eta.hpp"

namespace pendlab {
namespace {

std::size_t error_position(std::string_view text) {
  try {
    EtaQuotient::parse(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no ParseError for '" << text << "'";
  return 0;
}

TEST(EtaQuotientParse, CanonicalFormIsSortedAndMerged) {
  const EtaQuotient q = EtaQuotient::parse(" 2:1, 12:1 ,1:-1,4:-1,6:-1");
  EXPECT_EQ(q.to_string(), "1:-1,2:1,4:-1,6:-1,12:1");
  EXPECT_EQ(q, (EtaQuotient{{2, 1}, {12, 1}, {1, -1}, {4, -1}, {6, -1}}));
  EXPECT_EQ(EtaQuotient::parse("3:2,3:-2").factors().size(), 0U);
  EXPECT_EQ(EtaQuotient::parse("5:1,5:+2").to_string(), "5:3");
}

TEST(EtaQuotientParse, ErrorsCarryOriginalPositions) {
  EXPECT_EQ(error_position(""), 0U);
  EXPECT_EQ(error_position("1:x"), 2U);
  EXPECT_EQ(error_position("1 : x"), 4U);
  EXPECT_EQ(error_position("0:1"), 0U);
  EXPECT_EQ(error_position("1:1;2:1"), 3U);
  EXPECT_EQ(error_position("1:1,"), 4U);
  EXPECT_EQ(error_position("12"), 2U);
  EXPECT_EQ(error_position("-1:1"), 0U);
}

TEST(EtaQuotientExpand, EmptyQuotientIsOne) {
  EXPECT_EQ(expand_quotient(EtaQuotient{}, 10), Series::one(Backend::exact(), 10));
}

TEST(EtaQuotientExpand, InversePowersMatchColoredPartitions) {
  for (unsigned c = 1; c <= 3; ++c) {
    const oracle::Poly expected = oracle::colored_partition_counts(c, 150);
    const EtaQuotient q{{1, -static_cast<std::int64_t>(c)}};
    EXPECT_EQ(expand_quotient(q, 150), Series(std::vector<BigInt>(expected.begin(), expected.end()))) << c;
  }
}

TEST(EtaQuotientExpand, PendQuotientMatchesMultiplicityRule) {
  const oracle::Poly expected = oracle::pend_by_multiplicities(120);
  const Series got = expand_quotient(EtaQuotient::parse("2:1,12:1,1:-1,4:-1,6:-1"), 120);
  EXPECT_EQ(got, Series(std::vector<BigInt>(expected.begin(), expected.end())));
}

TEST(EtaQuotientExpand, AQuotientMatchesOracle) {
  const oracle::Poly expected = oracle::a_coefficients(120);
  const Series got = expand_quotient(EtaQuotient{{3, 2}, {1, -3}}, 120);
  EXPECT_EQ(got, Series(std::vector<BigInt>(expected.begin(), expected.end())));
  EXPECT_EQ(got.coefficient(28), 2631750);
}

}  // namespace
}  // namespace pendlab
