#include <gtest/gtest.h>

#include "prelie/identities.hpp"
#include "prelie/mutation.hpp"

namespace prelie {
namespace {

std::string field(const CheckReport& r, const std::string& key) {
  for (const auto& [k, v] : r.fields) {
    if (k == key) return v;
  }
  return "";
}

CheckReport run(const std::string& id, int n, int samples = 3) {
  CheckParams p;
  p.n = n;
  p.samples = samples;
  return verify(id, p);
}

TEST(Catalog, ThirteenChecksInOrder) {
  const auto& c = check_catalog();
  ASSERT_EQ(c.size(), 13u);
  EXPECT_EQ(c.front().id, "thm1");
  EXPECT_EQ(c.back().id, "bch");
}

TEST(Verify, QuickSuitePasses) {
  const auto reports = run_suite(SuiteLevel::quick, 0);
  ASSERT_EQ(reports.size(), 13u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed) << r.line() << "\n" << r.counterexample;
    EXPECT_TRUE(r.counterexample.empty());
  }
}

TEST(Verify, Examples) {
  const auto bs = run("bs_partition", 3);
  EXPECT_TRUE(bs.passed);
  EXPECT_EQ(field(bs, "permutations"), "6");
  EXPECT_EQ(field(bs, "chains"), "5");

  const auto thm = run("thm1", 2);
  EXPECT_TRUE(thm.passed);
  EXPECT_EQ(thm.line(), "PASS thm1 n=2 chains=2 tuples=400 seed=0");

  const auto commutative = run("bs_commutative", 3);
  EXPECT_TRUE(commutative.passed);
  EXPECT_EQ(field(commutative, "partitions"), "5");
  // the reduction needs (-th)^(n-k) under the weight convention used here
  EXPECT_EQ(field(commutative, "positive_weight_sign"), "fails");
}

TEST(Verify, EachCheckAtEveryCheapSize) {
  for (const auto& info : check_catalog()) {
    for (int n = info.min_n; n <= std::min(info.max_n, 3); ++n) {
      const auto r = run(info.id, n, 2);
      EXPECT_TRUE(r.passed) << r.line() << "\n" << r.counterexample;
    }
  }
}

TEST(Verify, Errors) {
  EXPECT_THROW(run("nope", 2), UnknownCheck);
  EXPECT_THROW(run("bch", 4), ParameterOutOfRange);
  EXPECT_THROW(run("thm1", 6), ParameterOutOfRange);
  CheckParams p;
  p.model = "banach";
  EXPECT_THROW(verify("prop21", p), ParameterOutOfRange);
}

TEST(Verify, DeterministicForFixedSeed) {
  CheckParams p;
  p.n = 3;
  p.seed = 17;
  const auto a = verify("mps_vs_magnus", p);
  const auto b = verify("mps_vs_magnus", p);
  EXPECT_EQ(a.line(), b.line());
  EXPECT_EQ(field(a, "seed"), "17");
}

std::size_t failures(const std::vector<CheckReport>& reports) {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.passed ? 0 : 1;
  return n;
}

TEST(Mutation, CoefficientSignBreaksKeyIdentityAtTwo) {
  const testing::ScopedMutant mutant(testing::Mutant::c_coefficient_sign);
  const auto r = run("keyeq2", 2);
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.counterexample.find("input: b^2"), std::string::npos);
  EXPECT_NE(r.counterexample.find("lhs: "), std::string::npos);
  EXPECT_TRUE(run("keyeq2", 3).passed);  // c(1,1) does not occur at n = 3
}

TEST(Mutation, EveryMutantIsDetectedByTheQuickSuite) {
  for (auto m : {testing::Mutant::bernoulli_b1_sign, testing::Mutant::c_coefficient_sign,
                 testing::Mutant::admissibility_order}) {
    const testing::ScopedMutant mutant(m);
    EXPECT_GT(failures(run_suite(SuiteLevel::quick, 0)), 0u) << static_cast<int>(m);
  }
  EXPECT_EQ(failures(run_suite(SuiteLevel::quick, 0)), 0u);
}

TEST(Mutation, BernoulliSignBreaksMagnus) {
  const testing::ScopedMutant mutant(testing::Mutant::bernoulli_b1_sign);
  EXPECT_FALSE(run("mps_vs_magnus", 2).passed);
}

TEST(Mutation, AdmissibilityBreaksForestExpansion) {
  const testing::ScopedMutant mutant(testing::Mutant::admissibility_order);
  EXPECT_FALSE(run("thm1", 2).passed);
}

}  // namespace
}  // namespace prelie
