#include <map>
#include <random>

#include <gtest/gtest.h>

#include "prelie/iota.hpp"
#include "prelie/magnus.hpp"
#include "test_util.hpp"

namespace prelie {
namespace {

using test::gl;
using test::same;

GLSeries series(const std::string& text, std::size_t order) { return GLSeries(gl(text), order); }

TEST(GLMagnus, LowDegrees) {
  const GLSeries omega = gl_magnus_fixed_point(4);
  EXPECT_TRUE(same(omega.component(1), gl("a")));
  EXPECT_TRUE(same(omega.component(2), gl("-1/2*a[a]")));
  EXPECT_TRUE(omega.component(0).is_zero());
  EXPECT_THROW(gl_magnus_fixed_point(0), std::invalid_argument);
}

TEST(GLMagnus, FixedPointEqualsLogOfExp) {
  const GLSeries omega = gl_magnus_fixed_point(5);
  const GLSeries log_exp = gl_log_of_exp(5);
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_TRUE(same(omega.component(n), log_exp.component(n))) << "degree " << n;
  EXPECT_TRUE(same(omega.component(3), gl("1/3*a[a[a]] + 1/12*a[a,a]")));
}

TEST(GLMagnus, CommutativePowersDivergeAtDegreeThree) {
  const GLSeries omega = gl_magnus_fixed_point(3, "a", ProductMode::commutative);
  EXPECT_TRUE(same(omega.component(2), gl("-1/2*a[a]")));
  EXPECT_TRUE(same(omega.component(3), gl("1/4*a[a[a]] + 1/12*a[a,a]")));
  EXPECT_NE(omega.component(3), gl_log_of_exp(3).component(3));
}

TEST(ModelMagnus, FreeModelLowOrders) {
  const FreeRB free;
  const RBExpr a = RBExpr::letter("a");
  const auto omega = magnus_in_model(free, a, 3);
  const RBExpr aa = pre_lie_left(free, a, a);
  EXPECT_EQ(omega[1], a);
  EXPECT_EQ(omega[2], Rational(1, 2) * aa);
  EXPECT_EQ(omega[3], Rational(1, 4) * pre_lie_left(free, aa, a) + Rational(1, 12) * pre_lie_left(free, a, aa));
}

TEST(ModelMagnus, IsImageOfTreeMagnus) {
  const FreeRB free;
  const RBExpr a = RBExpr::letter("a");
  const auto omega = magnus_in_model(free, a, 4);
  const GLEmbedding<FreeRB> embed(free, {{"a", a}});
  const GLSeries trees = gl_magnus_fixed_point(4);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(embed(trees.component(n)), omega[n]) << "degree " << n;
}

TEST(ModelMagnus, ExponentialSolvesRightFixedPoint) {
  const FreeRB free;
  const RBExpr a = RBExpr::letter("a");
  const auto exp_omega = double_exp_graded(free, magnus_in_model(free, a, 4));
  const auto x = right_fixed_point(free, a, 4);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(exp_omega[n], x[n]) << "degree " << n;
}

TEST(ModelMagnus, WeightedSequenceModel) {
  const MatrixSeqModel seq(2, 5, Rational(2, 3));
  std::mt19937_64 rng(5);
  const auto a = seq.random(rng);
  const auto exp_omega = double_exp_graded(seq, magnus_in_model(seq, a, 4));
  const auto x = right_fixed_point(seq, a, 4);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(seq.equal(exp_omega[n], x[n]));
}

TEST(Mps, SolomonCoefficients) {
  EXPECT_EQ(solomon_coefficient(1, 0), Rational(1));
  EXPECT_EQ(solomon_coefficient(2, 0), Rational(1, 2));
  EXPECT_EQ(solomon_coefficient(2, 1), Rational(-1, 2));
  EXPECT_EQ(solomon_coefficient(3, 1), Rational(-1, 6));
  EXPECT_THROW(solomon_coefficient(3, 3), std::invalid_argument);
}

TEST(Mps, LowDegrees) {
  const TimeDependentMatrix u = parse_poly_matrix("[[t, 1],[1 - t, 2]]");
  const auto mps = mps_log(u, 2);
  const std::vector<TimeDependentMatrix> us{u, u};
  EXPECT_EQ(mps[1], MatrixPolyModel::integrate(u));
  EXPECT_EQ(mps[2], Rational(1, 2) * simplex_integral(us, Permutation::identity(2)) -
                        Rational(1, 2) * simplex_integral(us, Permutation({2, 1})));
  const auto scalar = mps_log(parse_poly_matrix("[[1 + 3t^2]]"), 4);
  for (std::size_t n = 2; n <= 4; ++n) EXPECT_TRUE(scalar[n].is_zero());
}

TEST(Mps, AgreesWithLogarithmAndMagnus) {
  std::mt19937_64 rng(31);
  for (std::size_t dim : {1u, 2u, 3u}) {
    const MatrixPolyModel model(dim);
    const TimeDependentMatrix u = model.random(rng, 2);
    const auto mps = mps_log(u, 4);
    const auto dyson = dyson_series(u, 4, Orientation::right);
    const auto log = log_series(dyson);
    const auto omega = magnus_in_model(model, u, 4);
    for (std::size_t n = 1; n <= 4; ++n) {
      EXPECT_EQ(mps[n], log[n]) << "dim " << dim << " degree " << n;
      EXPECT_EQ(mps[n], model.R(omega[n])) << "dim " << dim << " degree " << n;
    }
    const auto back = exp_series(log);
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(back[n], dyson[n]);
  }
}

TEST(ProductOfExponentials, TwoGenerators) {
  const std::size_t order = 5;
  const GLSeries x = series("x", order);
  const GLSeries y = series("y", order);
  const GLSeries lhs = gl_exp(x, ProductMode::commutative).multiply(gl_exp(y, ProductMode::commutative), ProductMode::star);
  const GLVector brace_term = forest_action(gl("x"), gl_exp(y, ProductMode::commutative).total());
  const GLSeries rhs = gl_exp(GLSeries(gl("y") + brace_term, order), ProductMode::commutative);
  for (std::size_t n = 0; n <= order; ++n) EXPECT_TRUE(same(lhs.component(n), rhs.component(n))) << "degree " << n;
}

TEST(Sharp, Examples) {
  EXPECT_TRUE(same(sharp_product("x", GLVector(), 3).total(), gl("x")));
  const GLSeries s = sharp_product("y", gl("x"), 4);
  EXPECT_TRUE(same(s.component(1), gl("x + y")));
  EXPECT_TRUE(same(s.component(2), gl("x[y]")));
  const GLSeries lhs = gl_exp(series("x", 4), ProductMode::commutative)
                           .multiply(gl_exp(series("y", 4), ProductMode::commutative), ProductMode::star);
  const GLSeries rhs = gl_exp(s, ProductMode::commutative);
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_TRUE(same(lhs.component(n), rhs.component(n))) << "degree " << n;
  EXPECT_THROW(sharp_product("y", gl("x.x"), 3), std::invalid_argument);
}

TEST(Bch, FirstTerms) {
  const BchComparison bch = bch_check("x", "y");
  EXPECT_TRUE(same(bch.computed.component(1), gl("x + y")));
  EXPECT_TRUE(same(bch.computed.component(2), gl("1/2*x[y] - 1/2*y[x]")));
  for (std::size_t n = 0; n <= 3; ++n) {
    EXPECT_TRUE(same(bch.computed.component(n), bch.displayed.component(n))) << "degree " << n;
  }
  EXPECT_TRUE(bch.agrees());
}

}  // namespace
}  // namespace prelie
