#include "prelie/ode.hpp"

#include <algorithm>
#include <stdexcept>

#include "prelie/rb_ops.hpp"

namespace prelie {

namespace {

using RationalMatrix = Matrix<Rational>;

/// Coefficient matrices of t^0, t^1, ... of a polynomial matrix.
std::vector<RationalMatrix> monomial_coefficients(const TimeDependentMatrix& u) {
  int degree = -1;
  for (const auto& p : u.entries()) degree = std::max(degree, p.degree());
  std::vector<RationalMatrix> out(static_cast<std::size_t>(degree + 1), RationalMatrix(u.dim()));
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = 0; j < u.dim(); ++j) {
      const auto& cs = u(i, j).coefficients();
      for (std::size_t k = 0; k < cs.size(); ++k) out[k](i, j) = cs[k];
    }
  }
  return out;
}

void check_dimensions(std::span<const TimeDependentMatrix> us) {
  for (const auto& u : us) {
    if (u.dim() != us.front().dim()) throw std::invalid_argument("matrix dimension mismatch");
  }
}

}  // namespace

TimeDependentMatrix simplex_integral(std::span<const TimeDependentMatrix> us, const Permutation& s) {
  const std::size_t n = us.size();
  if (n == 0) throw std::invalid_argument("simplex integral needs at least one factor");
  if (static_cast<std::size_t>(s.size()) != n) throw std::invalid_argument("permutation size mismatch");
  check_dimensions(us);
  const std::size_t d = us.front().dim();

  std::vector<std::vector<RationalMatrix>> coeffs;
  for (const auto& u : us) coeffs.push_back(monomial_coefficients(u));

  // Each choice of one monomial per factor contributes
  //   A_1 ... A_n * int_simplex prod_j t_j^{e_j},
  // and the simplex integral of prod_j t_j^{e_j} is
  //   t^{sum e + n} / prod_j (e_1 + ... + e_j + j).
  std::vector<Polynomial> result(d * d);
  std::vector<int> exponent(n, 0);  // exponent of time t_j
  auto recurse = [&](auto&& self, std::size_t i, const RationalMatrix& product) -> void {
    if (i == n) {
      Rational denominator(1);
      int partial = 0;
      for (std::size_t j = 0; j < n; ++j) {
        partial += exponent[j];
        denominator *= Rational(partial + static_cast<int>(j) + 1);
      }
      const int power = partial + static_cast<int>(n);
      for (std::size_t k = 0; k < d * d; ++k) {
        const Rational& c = product.entries()[k];
        if (!c.is_zero()) result[k] += Polynomial::monomial(c / denominator, power);
      }
      return;
    }
    const std::size_t slot = static_cast<std::size_t>(s(static_cast<int>(i) + 1) - 1);
    for (std::size_t k = 0; k < coeffs[i].size(); ++k) {
      if (coeffs[i][k].is_zero()) continue;
      exponent[slot] += static_cast<int>(k);
      self(self, i + 1, i == 0 ? coeffs[i][k] : product * coeffs[i][k]);
      exponent[slot] -= static_cast<int>(k);
    }
  };
  recurse(recurse, 0, RationalMatrix::identity(d));
  return TimeDependentMatrix(d, std::move(result));
}

std::vector<TimeDependentMatrix> dyson_series(const TimeDependentMatrix& u, std::size_t order,
                                              Orientation orientation) {
  std::vector<TimeDependentMatrix> out{TimeDependentMatrix::identity(u.dim())};
  for (std::size_t n = 1; n <= order; ++n) {
    const auto& prev = out.back();
    out.push_back(MatrixPolyModel::integrate(orientation == Orientation::left ? u * prev : prev * u));
  }
  return out;
}

TimeDependentMatrix texp_symmetrized(std::span<const TimeDependentMatrix> us) {
  const int n = static_cast<int>(us.size());
  if (n == 0) throw std::invalid_argument("symmetrized integral needs at least one factor");
  check_dimensions(us);
  TimeDependentMatrix out(us.front().dim());
  const Permutation id = Permutation::identity(n);
  for (const auto& s : Permutation::all(n)) {
    std::vector<TimeDependentMatrix> ordered;
    for (int i = 1; i <= n; ++i) ordered.push_back(us[static_cast<std::size_t>(s(i) - 1)]);
    out += simplex_integral(ordered, id);
  }
  return out;
}

std::vector<TimeDependentMatrix> texp_prelie_form(const TimeDependentMatrix& u, std::size_t order) {
  const MatrixPolyModel model(u.dim());
  // integrals R(U^{|>k}) for k = 1..order
  std::vector<TimeDependentMatrix> integrals{TimeDependentMatrix(u.dim())};
  TimeDependentMatrix power = u;
  for (std::size_t k = 1; k <= order; ++k) {
    integrals.push_back(model.R(power));
    power = pre_lie_left(model, power, u);
  }
  std::vector<TimeDependentMatrix> out{model.one()};
  for (std::size_t n = 1; n <= order; ++n) {
    TimeDependentMatrix component(u.dim());
    for (const auto& comp : compositions(static_cast<int>(n))) {
      TimeDependentMatrix term = model.one();
      for (int k : comp) term = term * integrals[static_cast<std::size_t>(k)];
      component += c_coefficient(comp) * term;
    }
    out.push_back(Rational(1) / factorial(static_cast<int>(n)) * component);
  }
  return out;
}

std::vector<double> evaluate_at(const TimeDependentMatrix& m, double t) {
  std::vector<double> out;
  out.reserve(m.entries().size());
  for (const auto& p : m.entries()) out.push_back(p.evaluate(t));
  return out;
}

}  // namespace prelie
