#include "prelie/magnus.hpp"

#include <stdexcept>

namespace prelie {

namespace {

using MatrixSeries = std::vector<TimeDependentMatrix>;

/// Graded product of two series with the same truncation.
MatrixSeries multiply(const MatrixSeries& a, const MatrixSeries& b) {
  const std::size_t order = a.size() - 1;
  MatrixSeries out(order + 1, TimeDependentMatrix(a.front().dim()));
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

GLSeries generator_series(const std::string& generator, std::size_t order) {
  return GLSeries(tree_vector(Tree(generator)), order);
}

}  // namespace

GLSeries gl_magnus_fixed_point(std::size_t order, const std::string& generator, ProductMode powers) {
  if (order == 0) throw std::invalid_argument("Magnus expansion needs order >= 1");
  const GLVector a = tree_vector(Tree(generator));
  GLSeries omega(order);
  omega.set_component(1, a);
  for (std::size_t n = 2; n <= order; ++n) {
    // sum_k B_k / k! Omega^k up to degree n - 1, from the known components
    GLSeries known(order);
    for (std::size_t d = 1; d < n; ++d) known.set_component(d, omega.component(d));
    GLVector argument = unit_vector();
    GLSeries power(unit_vector(), order);
    for (std::size_t k = 1; k < n; ++k) {
      power = power.multiply(known, powers);
      const Rational b = bernoulli_number(static_cast<int>(k));
      if (b.is_zero()) continue;
      argument += (b / factorial(static_cast<int>(k))) * power.component(n - 1);
    }
    omega.set_component(n, degree_component(forest_action(a, argument), n));
  }
  return omega;
}

GLSeries gl_log_of_exp(std::size_t order, const std::string& generator) {
  return gl_log(gl_exp(generator_series(generator, order), ProductMode::commutative), ProductMode::star);
}

Rational solomon_coefficient(int n, int descents) {
  if (n < 1 || descents < 0 || descents > n - 1) throw std::invalid_argument("invalid descent class");
  Rational c = Rational(1) / (Rational(n) * binomial(n - 1, descents));
  return descents % 2 == 0 ? c : -c;
}

std::vector<TimeDependentMatrix> mps_log(const TimeDependentMatrix& u, std::size_t order) {
  std::vector<TimeDependentMatrix> out(order + 1, TimeDependentMatrix(u.dim()));
  for (std::size_t n = 1; n <= order; ++n) {
    const int size = static_cast<int>(n);
    const std::vector<TimeDependentMatrix> us(n, u);
    for (const auto& s : Permutation::all(size)) {
      const int d = static_cast<int>(s.descent_set().size());
      out[n] += solomon_coefficient(size, d) * simplex_integral(us, s);
    }
  }
  return out;
}

std::vector<TimeDependentMatrix> log_series(const std::vector<TimeDependentMatrix>& y) {
  if (y.empty() || y.front() != TimeDependentMatrix::identity(y.front().dim())) {
    throw std::invalid_argument("logarithm needs the identity as degree-0 component");
  }
  const std::size_t order = y.size() - 1;
  MatrixSeries u = y;
  u[0] = TimeDependentMatrix(y.front().dim());
  MatrixSeries out(order + 1, TimeDependentMatrix(y.front().dim()));
  MatrixSeries power = u;
  for (std::size_t k = 1; k <= order; ++k) {
    if (k > 1) power = multiply(power, u);
    const Rational c(k % 2 == 1 ? 1 : -1, static_cast<std::int64_t>(k));
    for (std::size_t d = 1; d <= order; ++d) out[d] += c * power[d];
  }
  return out;
}

std::vector<TimeDependentMatrix> exp_series(const std::vector<TimeDependentMatrix>& x) {
  if (x.empty() || !x.front().is_zero()) throw std::invalid_argument("exponential needs a zero degree-0 component");
  const std::size_t order = x.size() - 1;
  const std::size_t dim = x.front().dim();
  MatrixSeries out(order + 1, TimeDependentMatrix(dim));
  out[0] = TimeDependentMatrix::identity(dim);
  MatrixSeries power = out;
  for (std::size_t k = 1; k <= order; ++k) {
    power = multiply(power, x);
    for (auto& p : power) p *= Rational(1, static_cast<std::int64_t>(k));
    for (std::size_t d = 1; d <= order; ++d) out[d] += power[d];
  }
  return out;
}

GLSeries sharp_product(const std::string& a, const GLVector& b, std::size_t order) {
  if (!is_tree_combination(b)) throw std::invalid_argument("sharp product needs a combination of trees");
  const GLVector w = gl_magnus_fixed_point(order, a).total();
  GLVector out = tree_vector(Tree(a));
  GLVector term = truncate(b, order);
  for (std::size_t n = 0; !term.is_zero(); ++n) {
    out += term;
    term = truncate(graft(term, w), order);
    term *= Rational(1, static_cast<std::int64_t>(n + 1));
  }
  return GLSeries(out, order);
}

GLVector graft_bracket(const GLVector& u, const GLVector& v) { return graft(u, v) - graft(v, u); }

BchComparison bch_check(const std::string& x, const std::string& y, std::size_t order) {
  const GLSeries product = gl_exp(generator_series(x, order), ProductMode::star)
                               .multiply(gl_exp(generator_series(y, order), ProductMode::star), ProductMode::star);
  const GLVector vx = tree_vector(Tree(x));
  const GLVector vy = tree_vector(Tree(y));
  const GLVector xy = graft_bracket(vx, vy);
  GLVector displayed = vx + vy + Rational(1, 2) * xy;
  displayed += Rational(1, 12) * (graft_bracket(vx, xy) + graft_bracket(vy, graft_bracket(vy, vx)));
  return {gl_log(product, ProductMode::star), GLSeries(displayed, order)};
}

}  // namespace prelie
