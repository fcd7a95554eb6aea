#include <gtest/gtest.h>

#include "pendlab/families.hpp"
#include "pendlab/partitions.hpp"
#include "pendlab/report.hpp"

namespace pendlab {
namespace {

const Series& parity_pend() {
  static const Series table = pend_table(200000, Backend::parity()).values;
  return table;
}

TEST(Families, ClassifyUsesParityAtDelta) {
  for (std::uint64_t p : {5U, 7U, 11U, 13U}) {
    const PrimeCase c = classify(p, parity_pend());
    EXPECT_EQ(c.delta, (p * p - 1) / 8);
    EXPECT_EQ(c.pend_delta_parity, 0) << p;
    EXPECT_EQ(c.label, CaseLabel::case_ii);
  }
  EXPECT_EQ(classify(5, pend_table(10).values).pend_delta_parity, 0);
  EXPECT_THROW(classify(4, parity_pend()), std::invalid_argument);
  EXPECT_THROW(classify(5, pend_table(10, Backend::residue(3)).values), BackendMismatch);
  EXPECT_THROW(classify(13, pend_table(10, Backend::parity()).values), std::out_of_range);
}

TEST(Families, TheoremArithmetic) {
  const std::vector<ProgressionFamily> f = theorem_families({5, 3, 0, CaseLabel::case_ii}, 0);
  ASSERT_EQ(f.size(), 6U);
  EXPECT_EQ(f[0].modulus, 15625U);
  EXPECT_EQ(f[0].residue, 5078U);
  EXPECT_EQ(f[3].residue, 3125U * 4 + 1953);
  EXPECT_EQ(f[0].check_modulus, 2U);
  EXPECT_EQ(f[0].expected, 0U);
  EXPECT_TRUE(f[5].point);
  EXPECT_EQ(f[5].residue, 1953U);
  EXPECT_EQ(f[5].expected, 1U);

  const std::vector<ProgressionFamily> g = theorem_families({5, 3, 1, CaseLabel::case_i}, 1);
  EXPECT_EQ(g[0].modulus, 390625U);
  EXPECT_EQ(g[0].residue, 78125U + 48828);
  EXPECT_EQ(g.back().residue, 48828U);
  EXPECT_THROW(theorem_families({13, 21, 0, CaseLabel::case_ii}, 3), std::overflow_error);
}

TEST(Families, TheoremRefutedAtFirstIndex) {
  const PrimeCase c = classify(5, parity_pend());
  const std::vector<FamilyReport> reports = verify_families(theorem_families(c, 0), parity_pend());
  const auto j1 = std::find_if(reports.begin(), reports.end(), [](const FamilyReport& r) { return r.family.residue == 5078; });
  ASSERT_NE(j1, reports.end());
  EXPECT_EQ(j1->status, FamilyStatus::refuted);
  ASSERT_FALSE(j1->counterexamples.empty());
  EXPECT_EQ(j1->counterexamples.front(), std::make_pair(std::uint64_t{5078}, std::uint64_t{1}));
  const auto point = std::find_if(reports.begin(), reports.end(), [](const FamilyReport& r) { return r.family.residue == 1953; });
  ASSERT_NE(point, reports.end());
  EXPECT_EQ(point->status, FamilyStatus::refuted);
  EXPECT_EQ(point->n_checked, 1U);
}

TEST(Families, OutOfRangeIsInsufficientNeverVerified) {
  const ProgressionFamily far{1000000, 500000, 2, 0, "far"};
  const FamilyReport r = verify_family(far, parity_pend());
  EXPECT_EQ(r.status, FamilyStatus::insufficient_range);
  EXPECT_EQ(r.n_checked, 0U);
  EXPECT_FALSE(r.max_index.has_value());
  EXPECT_EQ(to_json(r)["max_index"], nullptr);
}

TEST(Families, SellersHoldsModThree) {
  const std::vector<ProgressionFamily> s = sellers_families(3);
  ASSERT_EQ(s.size(), 3U);
  EXPECT_EQ(s[0].modulus, 27U);
  EXPECT_EQ(s[0].residue, 19U);
  EXPECT_EQ(s[1].modulus, 243U);
  EXPECT_EQ(s[1].residue, 172U);
  EXPECT_EQ(s[2].modulus, 2187U);
  EXPECT_EQ(s[2].residue, 1549U);

  const Series mod3 = pend_table(10000, Backend::residue(3)).values;
  const std::vector<FamilyReport> reports = verify_families(s, mod3);
  for (const FamilyReport& r : reports) EXPECT_EQ(r.status, FamilyStatus::verified) << r.family.provenance;
  EXPECT_EQ(reports.front().n_checked, 370U);
  EXPECT_THROW(verify_family(s[0], parity_pend()), BackendMismatch);
}

TEST(Families, ReportRendering) {
  FamilyReport r{{27, 19, 3, 0, "sellers,27n+19"}, 2, 46, {{19, 2}}, FamilyStatus::refuted};
  EXPECT_EQ(to_json(r).dump(),
            R"({"A":27,"B":19,"mod":3,"expected":0,"status":"refuted","n_checked":2,"max_index":46,)"
            R"("counterexamples":[[19,2]],"provenance":"sellers,27n+19"})");
  EXPECT_EQ(to_csv_row(r), "27,19,3,0,refuted,2,46,1,\"sellers,27n+19\"");
}

}  // namespace
}  // namespace pendlab
