#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "prelie/ode.hpp"
#include "prelie/rb_ops.hpp"

namespace prelie {
namespace {

using M = TimeDependentMatrix;

M mat(const std::string& text) { return parse_poly_matrix(text); }
M integral(const M& u) { return MatrixPolyModel::integrate(u); }
M derivative(const M& u) {
  return u.map([](const Polynomial& p) { return p.derivative(); });
}

// Oracle: nested integral written out by hand for two factors.
M nested_pair(const M& first, const M& second) { return integral(integral(first) * second); }

std::vector<M> random_matrices(std::mt19937_64& rng, std::size_t dim, int count) {
  const MatrixPolyModel model(dim);
  std::vector<M> out;
  for (int i = 0; i < count; ++i) out.push_back(model.random(rng, 2));
  return out;
}

TEST(SimplexIntegral, ConstantIntegrandGivesSimplexVolume) {
  const M a = mat("[[1, 2],[0, -1]]");
  for (int n = 1; n <= 4; ++n) {
    const std::vector<M> us(static_cast<std::size_t>(n), a);
    M power = M::identity(2);
    for (int i = 0; i < n; ++i) power = power * a;
    const M expected = power.map([&](const Polynomial& p) {
      return p * Polynomial::monomial(Rational(1) / factorial(n), n);
    });
    for (const auto& s : Permutation::all(n)) EXPECT_EQ(simplex_integral(us, s), expected);
  }
}

TEST(SimplexIntegral, PairsUnfoldToNestedIntegrals) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 10; ++i) {
    const auto us = random_matrices(rng, 2, 2);
    EXPECT_EQ(simplex_integral(us, Permutation::identity(2)), nested_pair(us[0], us[1]));
    // swapped times: U_1 sees the later time
    EXPECT_EQ(simplex_integral(us, Permutation({2, 1})), integral(us[0] * integral(us[1])));
    EXPECT_EQ(simplex_integral(us, Permutation::identity(2)) + simplex_integral(us, Permutation({2, 1})),
              integral(us[0]) * integral(us[1]));
  }
}

TEST(SimplexIntegral, Errors) {
  const std::vector<M> mixed{M::identity(2), M::identity(3)};
  EXPECT_THROW(simplex_integral(mixed, Permutation::identity(2)), std::invalid_argument);
  const std::vector<M> two{M::identity(2), M::identity(2)};
  EXPECT_THROW(simplex_integral(two, Permutation::identity(3)), std::invalid_argument);
  EXPECT_THROW(texp_symmetrized(mixed), std::invalid_argument);
}

TEST(Dyson, ScalarOneIsExponential) {
  const auto y = dyson_series(mat("[[1]]"), 6, Orientation::left);
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(y[static_cast<std::size_t>(n)], mat("[[1]]").map([&](const Polynomial&) {
      return Polynomial::monomial(Rational(1) / factorial(n), n);
    }));
  }
}

TEST(Dyson, SolvesTheLinearEquation) {
  std::mt19937_64 rng(7);
  const M u = random_matrices(rng, 3, 1).front();
  const auto left = dyson_series(u, 5, Orientation::left);
  const auto right = dyson_series(u, 5, Orientation::right);
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(derivative(left[n]), u * left[n - 1]);
    EXPECT_EQ(derivative(right[n]), right[n - 1] * u);
  }
  EXPECT_EQ(left[2], integral(u * integral(u)));
}

TEST(Dyson, MatchesModelIntegral) {
  std::mt19937_64 rng(9);
  const MatrixPolyModel model(2);
  for (int i = 0; i < 20; ++i) {
    const M u = model.random(rng, 3);
    EXPECT_EQ(model.R(u), integral(u));
    EXPECT_EQ(dyson_series(u, 1, Orientation::left)[1], model.R(u));
  }
}

TEST(Symmetrized, SumsOverOrderingsAndIsSymmetric) {
  std::mt19937_64 rng(11);
  const auto us = random_matrices(rng, 2, 3);
  const std::vector<M> swapped{us[2], us[0], us[1]};
  EXPECT_EQ(texp_symmetrized(us), texp_symmetrized(swapped));
  EXPECT_EQ(texp_symmetrized(std::span(us).first(1)), integral(us[0]));

  const auto pair = std::span(us).first(2);
  const M bracket = integral(integral(us[1]) * us[0] - us[0] * integral(us[1]));
  EXPECT_EQ(texp_symmetrized(pair), integral(us[0]) * integral(us[1]) + bracket);
}

TEST(Symmetrized, EqualFactorsGiveFactorialTimesDyson) {
  std::mt19937_64 rng(12);
  const M u = random_matrices(rng, 2, 1).front();
  const auto right = dyson_series(u, 4, Orientation::right);
  for (int n = 1; n <= 4; ++n) {
    const std::vector<M> us(static_cast<std::size_t>(n), u);
    EXPECT_EQ(texp_symmetrized(us), factorial(n) * right[static_cast<std::size_t>(n)]);
  }
}

TEST(PreLieForm, EqualsDysonSeriesOfRightEquation) {
  std::mt19937_64 rng(17);
  for (std::size_t dim : {1u, 2u, 3u}) {
    const M u = random_matrices(rng, dim, 1).front();
    const auto form = texp_prelie_form(u, 4);
    const auto right = dyson_series(u, 4, Orientation::right);
    for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(form[n], right[n]) << "dim " << dim << " degree " << n;
  }
}

TEST(PreLieForm, DegreeTwoAndOrientation) {
  const M u = mat("[[0, 1],[t, 0]]");
  const auto form = texp_prelie_form(u, 2);
  const M r = integral(u);
  EXPECT_EQ(form[1], r);
  EXPECT_EQ(form[2], Rational(1, 2) * (r * r) + Rational(1, 2) * integral(r * u - u * r));
  // the left equation differs once U(t) does not commute with itself
  EXPECT_NE(form[2], dyson_series(u, 2, Orientation::left)[2]);
}

TEST(PreLieForm, ScalarIsExponentialOfIntegral) {
  const M u = mat("[[1 + 2t]]");
  const auto form = texp_prelie_form(u, 4);
  const M r = integral(u);
  M power = M::identity(1);
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(form[static_cast<std::size_t>(n)], (Rational(1) / factorial(n)) * power);
    power = power * r;
  }
}

TEST(Evaluate, FloatsForDisplay) {
  const auto v = evaluate_at(mat("[[1 + 2t, 0],[t, 3]]"), 0.5);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_DOUBLE_EQ(v[0], 2.0);
  EXPECT_DOUBLE_EQ(v[2], 0.5);
}

}  // namespace
}  // namespace prelie
