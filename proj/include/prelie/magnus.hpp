#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "prelie/combinatorics.hpp"
#include "prelie/grossman_larson.hpp"
#include "prelie/ode.hpp"
#include "prelie/rb_ops.hpp"

namespace prelie {

/// Solves Omega = a <- (Omega / (exp(Omega) - 1)) degree by degree in GL over
/// a single generator, using x/(e^x - 1) = sum_k B_k x^k / k!. The k-th power
/// is taken in the given product: the Grossman-Larson product makes a <- X
/// the k-fold iterated right grafting of Omega, and reproduces
/// log*(exp(a)); the commutative product is available for comparison.
GLSeries gl_magnus_fixed_point(std::size_t order, const std::string& generator = "a",
                               ProductMode powers = ProductMode::star);

/// log*(exp(a)): commutative exponential, Grossman-Larson logarithm.
GLSeries gl_log_of_exp(std::size_t order, const std::string& generator = "a");

/// Magnus expansion in a Rota-Baxter model, graded by the degree in a
/// (entry 0 is zero):
///   Omega_1 = a,
///   Omega_n = sum_k (-1)^k B_k / k! sum_{n_1+...+n_k = n-1}
///             Omega_{n_1} |> (Omega_{n_2} |> ( ... |> (Omega_{n_k} |> a))).
template <RotaBaxterModel M>
std::vector<typename M::Element> magnus_in_model(const M& m, const typename M::Element& a, std::size_t order) {
  using E = typename M::Element;
  std::vector<E> omega(order + 1, m.zero());
  if (order == 0) return omega;
  omega[1] = a;
  // nested[k][d]: sum over compositions of d-1 into k parts of the nested
  // left products ending in a (a-degree d)
  std::vector<std::vector<E>> nested(order, std::vector<E>(order + 1, m.zero()));
  nested[0][1] = a;
  for (std::size_t n = 2; n <= order; ++n) {
    E total = m.zero();
    for (std::size_t k = 1; k < n; ++k) {
      E sum = m.zero();
      for (std::size_t j = 1; j < n; ++j) {
        const std::size_t rest = n - j;
        if (k == 1 ? rest != 1 : rest < k) continue;  // nested[k-1][rest] vanishes
        sum = m.add(sum, pre_lie_left(m, omega[j], nested[k - 1][rest]));
      }
      nested[k][n] = sum;
      Rational coefficient = bernoulli_number(static_cast<int>(k)) / factorial(static_cast<int>(k));
      if (k % 2 == 1) coefficient = -coefficient;
      total = m.add(total, m.scale(coefficient, sum));
    }
    omega[n] = total;
  }
  return omega;
}

/// Graded exp in the double product: entry n is sum_k (Omega^{*k})_n / k!,
/// entry 0 is zero (the unit is kept implicit).
template <RotaBaxterModel M>
std::vector<typename M::Element> double_exp_graded(const M& m, const std::vector<typename M::Element>& omega) {
  using E = typename M::Element;
  const std::size_t order = omega.size() - 1;
  std::vector<E> out(order + 1, m.zero());
  std::vector<E> power = omega;  // graded components of Omega^{*k}
  power[0] = m.zero();
  for (std::size_t k = 1; k <= order; ++k) {
    const Rational inv = Rational(1) / factorial(static_cast<int>(k));
    for (std::size_t d = 1; d <= order; ++d) out[d] = m.add(out[d], m.scale(inv, power[d]));
    std::vector<E> next(order + 1, m.zero());
    for (std::size_t i = 1; i <= order; ++i) {
      for (std::size_t j = 1; i + j <= order; ++j) next[i + j] = m.add(next[i + j], double_product(m, power[i], omega[j]));
    }
    power = std::move(next);
  }
  return out;
}

/// Solution x = a + R(x)a by iteration, graded: x_1 = a, x_n = R(x_{n-1}) a.
template <RotaBaxterModel M>
std::vector<typename M::Element> right_fixed_point(const M& m, const typename M::Element& a, std::size_t order) {
  std::vector<typename M::Element> x(order + 1, m.zero());
  if (order == 0) return x;
  x[1] = a;
  for (std::size_t n = 2; n <= order; ++n) x[n] = m.mul(m.R(x[n - 1]), a);
  return x;
}

/// Solomon coefficient (-1)^|S| / n * binom(n-1, |S|)^{-1} of the descent
/// class S in S_n.
Rational solomon_coefficient(int n, int descents);

/// Logarithm of the time-ordered exponential by descent classes, graded by
/// the number of U factors (entry 0 is zero):
///   sum_{s in S_n} solomon_coefficient(n, |Desc(s)|) U_s,
/// with U_s = simplex_integral(U, ..., U; s).
std::vector<TimeDependentMatrix> mps_log(const TimeDependentMatrix& u, std::size_t order);

/// Graded logarithm log(1 + Y_1 + Y_2 + ...) of a series given by its degree
/// components (entry 0 must be the identity).
std::vector<TimeDependentMatrix> log_series(const std::vector<TimeDependentMatrix>& y);
/// Graded exponential of a series without constant term.
std::vector<TimeDependentMatrix> exp_series(const std::vector<TimeDependentMatrix>& x);

/// a # b = a + sum_n 1/n! (...((b <- W) <- W) ... <- W), with W the Magnus
/// series of the generator a; truncated at total degree `order`. b must be a
/// combination of trees.
GLSeries sharp_product(const std::string& a, const GLVector& b, std::size_t order);

/// Grafting bracket [u, v] = u <- v - v <- u.
GLVector graft_bracket(const GLVector& u, const GLVector& v);

/// Both sides of the degree <= 3 BCH comparison for generators x, y:
///   log*(exp*(x) * exp*(y))  and  x + y + 1/2[x,y] + 1/12([x,[x,y]] + [y,[y,x]]).
struct BchComparison {
  GLSeries computed;
  GLSeries displayed;
  [[nodiscard]] bool agrees() const { return computed == displayed; }
};
BchComparison bch_check(const std::string& x, const std::string& y, std::size_t order = 3);

}  // namespace prelie
