#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "prelie/combinatorics.hpp"
#include "prelie/rb_models.hpp"

namespace prelie {

/// U(t): square matrix whose entries are polynomials in t.
using TimeDependentMatrix = PolyMatrix;

/// Iterated integral over the simplex 0 <= t_1 <= ... <= t_n <= t of
///   U_1(t_{s(1)}) U_2(t_{s(2)}) ... U_n(t_{s(n)}),
/// i.e. the factor order is fixed and the time arguments are permuted.
/// Computed by expanding every entry into monomials and integrating each
/// monomial over the simplex in closed form. Throws std::invalid_argument on a
/// dimension mismatch or when the permutation size differs from the list.
TimeDependentMatrix simplex_integral(std::span<const TimeDependentMatrix> us, const Permutation& s);

enum class Orientation {
  left,   // Y' = U Y: degree n term is R(U * previous)
  right,  // Y' = Y U: degree n term is R(previous * U)
};

/// Degree components 0..N (by number of U factors) of the solution of the
/// linear equation with Y(0) = 1, built by iterating the integral.
std::vector<TimeDependentMatrix> dyson_series(const TimeDependentMatrix& u, std::size_t order, Orientation orientation);

/// Sum over all orderings of the factors of the ordered-simplex integral with
/// earlier times to the left:
///   sum_s int_{r_1 <= ... <= r_n} U_{s(1)}(r_1) ... U_{s(n)}(r_n).
/// Symmetric in the input list.
TimeDependentMatrix texp_symmetrized(std::span<const TimeDependentMatrix> us);

/// Degree components 0..N of
///   1 + sum_n 1/n! sum_{k_1+...+k_l=n} c(k) R(U^{|>k_1}) ... R(U^{|>k_l}),
/// where U^{|>1} = U and U^{|>k+1} = [R(U^{|>k}), U].
std::vector<TimeDependentMatrix> texp_prelie_form(const TimeDependentMatrix& u, std::size_t order);

/// Entrywise floating-point evaluation at t (for display only).
std::vector<double> evaluate_at(const TimeDependentMatrix& m, double t);

}  // namespace prelie
