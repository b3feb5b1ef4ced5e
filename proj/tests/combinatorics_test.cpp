#include <algorithm>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "prelie/combinatorics.hpp"
#include "prelie/mutation.hpp"

namespace prelie {
namespace {

/// Every ordered set partition of [n], by brute force over surjections.
std::vector<PartitionChain> all_ordered_partitions(int n) {
  std::vector<PartitionChain> out;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::vector<Block> blocks(static_cast<std::size_t>(k));
      for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])].push_back(i + 1);
      if (std::none_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.empty(); })) {
        out.push_back(PartitionChain{blocks});
      }
      int i = 0;
      for (; i < n; ++i) {
        if (++label[static_cast<std::size_t>(i)] < k) break;
        label[static_cast<std::size_t>(i)] = 0;
      }
      if (i == n) break;
    }
  }
  return out;
}

/// Literal statistic: for every k < i, max(P_i) exceeds every element of P_k.
bool statistic_holds(const PartitionChain& c) {
  for (std::size_t i = 0; i < c.blocks.size(); ++i) {
    const int sup = *std::max_element(c.blocks[i].begin(), c.blocks[i].end());
    for (std::size_t k = 0; k < i; ++k) {
      for (int j : c.blocks[k]) {
        if (!(sup > j)) return false;
      }
    }
  }
  return true;
}

TEST(AdmissibleChains, SmallCases) {
  const auto one = admissible_partition_chains(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].str(), "({1})");

  std::set<std::string> two;
  for (const auto& c : admissible_partition_chains(2)) two.insert(c.str());
  EXPECT_EQ(two, (std::set<std::string>{"({1},{2})", "({1,2})"}));
  EXPECT_FALSE(is_admissible(PartitionChain{{{2}, {1}}}));

  EXPECT_EQ(admissible_partition_chains(3).size(), 5u);
  EXPECT_THROW(admissible_partition_chains(0), std::invalid_argument);
}

TEST(AdmissibleChains, MatchBruteForceFilter) {
  for (int n = 1; n <= 6; ++n) {
    std::set<PartitionChain> expected;
    for (auto& c : all_ordered_partitions(n)) {
      if (statistic_holds(c)) expected.insert(c);
    }
    const auto got = admissible_partition_chains(n);
    EXPECT_EQ(std::set<PartitionChain>(got.begin(), got.end()), expected) << "n=" << n;
    EXPECT_EQ(got.size(), bell_number(n));
    for (const auto& c : got) EXPECT_TRUE(is_admissible(c));
  }
}

TEST(AdmissibleChains, TermCountIsFactorial) {
  for (int n = 1; n <= 7; ++n) {
    Rational total(0);
    for (const auto& c : admissible_partition_chains(n)) {
      Rational term(1);
      for (const auto& b : c.blocks) term *= factorial(static_cast<int>(b.size()) - 1);
      total += term;
    }
    EXPECT_EQ(total, factorial(n)) << "n=" << n;
  }
}

TEST(BellNumbers, Values) {
  const std::uint64_t expected[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 0; n < 8; ++n) {
    EXPECT_EQ(bell_number(n), expected[n]);
    EXPECT_EQ(set_partitions(n).size(), expected[n]);
  }
}

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_EQ(Permutation::all(4).size(), 24u);
  const Permutation s({3, 1, 2});
  EXPECT_EQ(s.inverse(), Permutation({2, 3, 1}));
}

TEST(Permutation, DescentSets) {
  EXPECT_TRUE(Permutation::identity(5).descent_set().empty());
  EXPECT_EQ(Permutation({2, 1}).descent_set(), std::vector<int>{1});
  EXPECT_EQ(Permutation({1, 3, 2, 4}).descent_set(), std::vector<int>{2});
}

TEST(CycleDecomposition, WorkedExamples) {
  EXPECT_EQ(format_cycles(canonical_cycle_decomposition(Permutation({3, 2, 5, 4, 1, 6, 8, 7}))), "(32)(541)(6)(87)");
  EXPECT_EQ(format_cycles(canonical_cycle_decomposition(Permutation({4, 3, 5, 1, 2}))), "(43)(512)");
  const auto id = canonical_cycle_decomposition(Permutation::identity(4));
  EXPECT_EQ(id.size(), 4u);
  for (const auto& c : id) EXPECT_EQ(c.size(), 1u);
}

TEST(CycleDecomposition, BijectionAndShape) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& s : Permutation::all(n)) {
      const auto cycles = canonical_cycle_decomposition(s);
      EXPECT_EQ(flatten_cycles(cycles), s);
      EXPECT_EQ(cycles.size(), s.record_positions().size());
      int previous_max = 0;
      for (const auto& c : cycles) {
        EXPECT_EQ(c.front(), *std::max_element(c.begin(), c.end()));
        EXPECT_GT(c.front(), previous_max);
        previous_max = c.front();
      }
      seen.insert(cycles);
    }
    EXPECT_EQ(static_cast<int>(seen.size()), static_cast<int>(Permutation::all(n).size()));
  }
}

TEST(DescentClasses, MultinomialCounts) {
  for (int n = 1; n <= 6; ++n) {
    const auto perms = Permutation::all(n);
    for (const auto& comp : compositions(n)) {
      std::set<int> allowed;
      int eta = 0;
      for (std::size_t i = 0; i + 1 < comp.size(); ++i) allowed.insert(eta += comp[i]);
      int count = 0;
      for (const auto& s : perms) {
        const auto d = s.descent_set();
        if (std::all_of(d.begin(), d.end(), [&](int i) { return allowed.contains(i); })) ++count;
      }
      Rational multinomial = factorial(n);
      for (int part : comp) multinomial /= factorial(part);
      EXPECT_EQ(Rational(count), multinomial) << format_composition(comp);
    }
  }
}

TEST(Compositions, Enumeration) {
  EXPECT_EQ(compositions(3), (std::vector<Composition>{{1, 1, 1}, {1, 2}, {2, 1}, {3}}));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(compositions(n).size(), std::size_t{1} << (n - 1));
}

TEST(CCoefficient, PartialSumProduct) {
  EXPECT_EQ(c_coefficient({1, 1}), Rational(1));
  EXPECT_EQ(c_coefficient({2}), Rational(1));
  EXPECT_EQ(c_coefficient({3}), Rational(2));
  EXPECT_EQ(c_coefficient({2, 1}), Rational(1));
  EXPECT_EQ(c_coefficient({1, 2}), Rational(2));
  EXPECT_EQ(c_coefficient({1, 1, 1}), Rational(1));
  EXPECT_THROW(c_coefficient({}), std::invalid_argument);
  EXPECT_THROW(c_coefficient({0, 2}), std::invalid_argument);
}

TEST(Bernoulli, Values) {
  EXPECT_EQ(bernoulli_number(0), Rational(1));
  EXPECT_EQ(bernoulli_number(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli_number(2), Rational(1, 6));
  EXPECT_EQ(bernoulli_number(3), Rational(0));
  EXPECT_EQ(bernoulli_number(4), Rational(-1, 30));
  EXPECT_EQ(bernoulli_number(12), Rational(-691, 2730));
  EXPECT_THROW(bernoulli_number(-1), std::invalid_argument);
}

TEST(Mutants, AreScopedAndTargeted) {
  {
    testing::ScopedMutant m(testing::Mutant::bernoulli_b1_sign);
    EXPECT_EQ(bernoulli_number(1), Rational(1, 2));
    EXPECT_EQ(bernoulli_number(2), Rational(1, 6));
  }
  EXPECT_EQ(bernoulli_number(1), Rational(-1, 2));
  {
    testing::ScopedMutant m(testing::Mutant::c_coefficient_sign);
    EXPECT_EQ(c_coefficient({1, 1}), Rational(-1));
    EXPECT_EQ(c_coefficient({2}), Rational(1));
  }
  {
    testing::ScopedMutant m(testing::Mutant::admissibility_order);
    for (const auto& c : admissible_partition_chains(3)) {
      if (c.blocks.size() > 1) EXPECT_FALSE(is_admissible(c));
    }
  }
  EXPECT_EQ(testing::active_mutant(), testing::Mutant::none);
}

}  // namespace
}  // namespace prelie
