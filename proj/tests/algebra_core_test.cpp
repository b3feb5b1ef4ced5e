#include <random>

#include <gtest/gtest.h>

#include "prelie/enumeration.hpp"
#include "prelie/gl_vector.hpp"
#include "prelie/polynomial.hpp"
#include "prelie/rational.hpp"
#include "test_util.hpp"

namespace prelie {
namespace {

using test::gl;
using test::tr;

TEST(Rational, LowestTermsAndSign) {
  EXPECT_EQ(Rational(2, -4).str(), "-1/2");
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ArbitraryPrecision) {
  // 30! does not fit in 64 bits
  EXPECT_EQ(factorial(30).str(), "265252859812191058636308480000000");
  EXPECT_EQ(factorial(30) / factorial(29), Rational(30));
  EXPECT_EQ(binomial(6, 3), Rational(20));
}

TEST(Polynomial, ParseFormatIntegrate) {
  const auto p = Polynomial::parse("1 + 2*t - 1/2*t^2", "t");
  EXPECT_EQ(p.str("t"), "1 + 2*t - 1/2*t^2");
  EXPECT_EQ(Polynomial::parse("3t", "t"), Polynomial::monomial(Rational(3), 1));
  EXPECT_EQ(p.integral().str("t"), "t + t^2 - 1/6*t^3");
  EXPECT_EQ(p.integral().derivative(), p);
  EXPECT_EQ(Polynomial::parse("(-1 + 2*th)", "th").str("th"), "-1 + 2*th");
  EXPECT_EQ(Polynomial::parse("0", "t"), Polynomial());
}

TEST(ParseElement, SingleTree) {
  const GLVector v = gl("a[b,c[d]]");
  ASSERT_EQ(v.size(), 1u);
  const auto& [f, c] = *v.begin();
  EXPECT_EQ(c, Rational(1));
  ASSERT_EQ(f.weight(), 1u);
  EXPECT_EQ(f.degree(), 4u);
}

TEST(ParseElement, TwoTerms) {
  const GLVector v = gl("1/2*a.b - a[b]");
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v.coefficient(Forest({tr("a"), tr("b")})), Rational(1, 2));
  EXPECT_EQ(v.coefficient(Forest(tr("a[b]"))), Rational(-1));
}

TEST(ParseElement, ChildrenFormAMultiset) {
  EXPECT_EQ(tr("a[c,b]"), tr("a[b,c]"));
  EXPECT_EQ(gl("a[c,b]"), gl("a[b,c]"));
  EXPECT_EQ(gl("b.a"), gl("a.b"));
  EXPECT_EQ(tr("a[b[c],b]").str(), "a[b,b[c]]");
}

TEST(ParseElement, EmptyForestAndZero) {
  EXPECT_EQ(gl("e"), unit_vector());
  EXPECT_TRUE(gl("0").is_zero());
  EXPECT_TRUE(gl("a - a").is_zero());
  EXPECT_EQ(gl("2*e + a"), GLVector(Forest(), Rational(2)) + gl("a"));
}

TEST(ParseElement, Errors) {
  EXPECT_THROW(gl("a["), ParseError);
  EXPECT_THROW(gl("a[b,]"), ParseError);
  EXPECT_THROW(gl("1/0*a"), ParseError);
  EXPECT_THROW(gl("2 a"), ParseError);
  EXPECT_THROW(gl("e[a]"), ParseError);
  try {
    gl("a.b +");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  const Alphabet ab{"a", "b"};
  EXPECT_NO_THROW(parse_element("a[b]", ab));
  EXPECT_THROW(parse_element("a[x]", ab), UnknownDecoration);
}

TEST(FormatElement, Examples) {
  EXPECT_EQ(format_element(GLVector()), "0");
  EXPECT_EQ(format_element(GLVector(Forest({tr("a"), tr("a"), tr("b")}), Rational(2))), "2*a.a.b");
  EXPECT_EQ(format_element(GLVector(Forest(tr("a[b[c]]")), Rational(-1, 3))), "-1/3*a[b[c]]");
  EXPECT_EQ(format_element(gl("a[b] + a.b")), "a.b + a[b]");
  EXPECT_EQ(format_element(gl("a[b] - 3*e + b")), "-3*e + b + a[b]");
}

TEST(Canonical, Idempotent) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Tree t = random_tree(rng, 1 + i % 9, {"a", "b", "c"});
    const Tree again = parse_tree(t.str());
    EXPECT_EQ(again, t);
    EXPECT_EQ(again.str(), t.str());
  }
}

TEST(Canonical, EqualityMatchesSerialization) {
  const auto trees = all_trees_up_to(4, {"a", "b"});
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = 0; j < trees.size(); ++j) {
      EXPECT_EQ(trees[i] == trees[j], trees[i].str() == trees[j].str());
    }
  }
}

TEST(FormatElement, RoundTripProperty) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    GLVector v = random_tree_combination(rng, 4, 5, {"a", "b", "c"});
    v = commutative_product(v, random_tree_combination(rng, 2, 3, {"a", "b"})) + v;
    const std::string text = format_element(v);
    EXPECT_EQ(parse_element(text), v) << text;
    EXPECT_EQ(format_element(parse_element(text)), text);
  }
}

TEST(Enumeration, TreeCounts) {
  // unlabelled rooted trees: 1, 1, 2, 4, 9, 20 (OEIS A000081)
  const std::size_t expected[] = {1, 1, 2, 4, 9, 20};
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(all_trees(n, {"a"}).size(), expected[n - 1]);
  // two decorations: 2, 4, 14, 52
  EXPECT_EQ(all_trees(3, {"a", "b"}).size(), 14u);
  EXPECT_EQ(all_trees(4, {"a", "b"}).size(), 52u);
  EXPECT_EQ(all_trees_up_to(3, {"a", "b"}).size(), 20u);
}

TEST(CommutativeRing, UnitAssociativityGrading) {
  std::mt19937_64 rng(3);
  const std::vector<std::string> abc{"a", "b", "c"};
  for (int i = 0; i < 50; ++i) {
    const GLVector x = random_tree_combination(rng, 3, 3, abc);
    const GLVector y = random_tree_combination(rng, 3, 3, abc);
    const GLVector z = random_tree_combination(rng, 2, 3, abc);
    EXPECT_EQ(commutative_product(x, unit_vector()), x);
    EXPECT_EQ(commutative_product(x, y), commutative_product(y, x));
    EXPECT_EQ(commutative_product(commutative_product(x, y), z), commutative_product(x, commutative_product(y, z)));
    EXPECT_EQ(commutative_product(x, y + z), commutative_product(x, y) + commutative_product(x, z));
  }
  for (const auto& f : all_forests(3, {"a", "b"})) {
    for (const auto& g : all_forests(2, {"a", "b"})) {
      const Forest fg = f * g;
      EXPECT_EQ(fg.degree(), f.degree() + g.degree());
      EXPECT_EQ(fg.weight(), f.weight() + g.weight());
    }
  }
}

TEST(GradedComponents, Extraction) {
  const GLVector v = gl("e + a + 2*a.b - a[b] + a[b,b]");
  EXPECT_EQ(degree_component(v, 2), gl("2*a.b - a[b]"));
  EXPECT_EQ(max_degree(v), 3u);
  EXPECT_EQ(truncate(v, 1), gl("e + a"));
}

}  // namespace
}  // namespace prelie
