#pragma once

#include <concepts>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "prelie/matrix.hpp"
#include "prelie/polynomial.hpp"
#include "prelie/rational.hpp"
#include "prelie/rb_free.hpp"

namespace prelie {

/// An associative unital algebra with a Rota-Baxter map R of some weight th:
///   R(x)R(y) = R(R(x)y + xR(y)) + th R(xy).
/// theta_times multiplies by the weight (which may be formal).
template <class M>
concept RotaBaxterModel = requires(const M& m, const typename M::Element& x, const Rational& q) {
  typename M::Element;
  { m.zero() } -> std::convertible_to<typename M::Element>;
  { m.one() } -> std::convertible_to<typename M::Element>;
  { m.add(x, x) } -> std::convertible_to<typename M::Element>;
  { m.sub(x, x) } -> std::convertible_to<typename M::Element>;
  { m.mul(x, x) } -> std::convertible_to<typename M::Element>;
  { m.scale(q, x) } -> std::convertible_to<typename M::Element>;
  { m.R(x) } -> std::convertible_to<typename M::Element>;
  { m.theta_times(x) } -> std::convertible_to<typename M::Element>;
  { m.equal(x, x) } -> std::convertible_to<bool>;
  { m.str(x) } -> std::convertible_to<std::string>;
};

/// The free Rota-Baxter algebra with formal weight th.
struct FreeRB {
  using Element = RBExpr;

  [[nodiscard]] Element zero() const { return {}; }
  [[nodiscard]] Element one() const { return RBExpr::unit(); }
  [[nodiscard]] Element add(const Element& x, const Element& y) const { return x + y; }
  [[nodiscard]] Element sub(const Element& x, const Element& y) const { return x - y; }
  [[nodiscard]] Element mul(const Element& x, const Element& y) const { return x * y; }
  [[nodiscard]] Element scale(const Rational& q, const Element& x) const { return Polynomial(q) * x; }
  [[nodiscard]] Element R(const Element& x) const { return rota(x); }
  [[nodiscard]] Element theta_times(const Element& x) const { return Polynomial::variable() * x; }
  [[nodiscard]] bool equal(const Element& x, const Element& y) const { return x == y; }
  [[nodiscard]] std::string str(const Element& x) const { return x.str(); }
  [[nodiscard]] std::string name() const { return "free"; }
  [[nodiscard]] Element letter(const std::string& b) const { return RBExpr::letter(b); }
};

using PolyMatrix = Matrix<Polynomial>;

/// d x d matrices of polynomials in t; R is integration from 0 to t (weight 0).
class MatrixPolyModel {
 public:
  using Element = PolyMatrix;
  explicit MatrixPolyModel(std::size_t dim) : dim_(dim) {}

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] Element zero() const { return Element(dim_); }
  [[nodiscard]] Element one() const { return Element::identity(dim_); }
  [[nodiscard]] Element add(const Element& x, const Element& y) const { return x + y; }
  [[nodiscard]] Element sub(const Element& x, const Element& y) const { return x - y; }
  [[nodiscard]] Element mul(const Element& x, const Element& y) const { return x * y; }
  [[nodiscard]] Element scale(const Rational& q, const Element& x) const { return q * x; }
  [[nodiscard]] Element R(const Element& x) const { return integrate(x); }
  [[nodiscard]] Element theta_times(const Element&) const { return zero(); }
  [[nodiscard]] bool equal(const Element& x, const Element& y) const { return x == y; }
  [[nodiscard]] std::string str(const Element& x) const;
  [[nodiscard]] std::string name() const { return "matrix-poly"; }

  /// Entrywise integral from 0 to t; shared with the ode module.
  static Element integrate(const Element& x);
  /// Random matrix with rational entries of t-degree at most max_degree.
  Element random(std::mt19937_64& rng, int max_degree) const;

 private:
  std::size_t dim_;
};

/// Sequences of length L of d x d rational matrices under pointwise
/// operations; R(f)(n) = th * sum_{k<n} f(k), a Rota-Baxter map of weight th.
class MatrixSeqModel {
 public:
  using Element = std::vector<Matrix<Rational>>;
  MatrixSeqModel(std::size_t dim, std::size_t length, Rational theta)
      : dim_(dim), length_(length), theta_(std::move(theta)) {}

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t length() const { return length_; }
  [[nodiscard]] const Rational& theta() const { return theta_; }
  [[nodiscard]] Element zero() const { return Element(length_, Matrix<Rational>(dim_)); }
  [[nodiscard]] Element one() const { return Element(length_, Matrix<Rational>::identity(dim_)); }
  [[nodiscard]] Element add(const Element& x, const Element& y) const;
  [[nodiscard]] Element sub(const Element& x, const Element& y) const;
  [[nodiscard]] Element mul(const Element& x, const Element& y) const;
  [[nodiscard]] Element scale(const Rational& q, const Element& x) const;
  [[nodiscard]] Element R(const Element& x) const;
  [[nodiscard]] Element theta_times(const Element& x) const { return scale(theta_, x); }
  [[nodiscard]] bool equal(const Element& x, const Element& y) const { return x == y; }
  [[nodiscard]] std::string str(const Element& x) const;
  [[nodiscard]] std::string name() const { return "matrix-seq"; }

  Element random(std::mt19937_64& rng) const;

 private:
  void check(const Element& x) const;
  std::size_t dim_;
  std::size_t length_;
  Rational theta_;
};

using LaurentMatrix = Matrix<Laurent>;

/// d x d matrices of Laurent polynomials in z; R keeps the strictly negative
/// powers of z (an idempotent onto a subalgebra with complementary
/// subalgebra), which is a Rota-Baxter map of weight -1.
class LaurentPoleModel {
 public:
  using Element = LaurentMatrix;
  explicit LaurentPoleModel(std::size_t dim) : dim_(dim) {}

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] Element zero() const { return Element(dim_); }
  [[nodiscard]] Element one() const { return Element::identity(dim_); }
  [[nodiscard]] Element add(const Element& x, const Element& y) const { return x + y; }
  [[nodiscard]] Element sub(const Element& x, const Element& y) const { return x - y; }
  [[nodiscard]] Element mul(const Element& x, const Element& y) const { return x * y; }
  [[nodiscard]] Element scale(const Rational& q, const Element& x) const { return q * x; }
  [[nodiscard]] Element R(const Element& x) const;
  [[nodiscard]] Element theta_times(const Element& x) const { return -x; }
  [[nodiscard]] bool equal(const Element& x, const Element& y) const { return x == y; }
  [[nodiscard]] std::string str(const Element& x) const;
  [[nodiscard]] std::string name() const { return "laurent-pole"; }

  /// Random matrix with entries supported on powers min_power..max_power.
  Element random(std::mt19937_64& rng, int min_power, int max_power) const;

 private:
  std::size_t dim_;
};

/// Same algebra, with R replaced by -th id - R (again Rota-Baxter of weight th).
template <RotaBaxterModel M>
class Complemented {
 public:
  using Element = typename M::Element;
  explicit Complemented(M base) : base_(std::move(base)) {}

  [[nodiscard]] const M& base() const { return base_; }
  [[nodiscard]] Element zero() const { return base_.zero(); }
  [[nodiscard]] Element one() const { return base_.one(); }
  [[nodiscard]] Element add(const Element& x, const Element& y) const { return base_.add(x, y); }
  [[nodiscard]] Element sub(const Element& x, const Element& y) const { return base_.sub(x, y); }
  [[nodiscard]] Element mul(const Element& x, const Element& y) const { return base_.mul(x, y); }
  [[nodiscard]] Element scale(const Rational& q, const Element& x) const { return base_.scale(q, x); }
  [[nodiscard]] Element R(const Element& x) const {
    return base_.sub(base_.scale(Rational(-1), base_.theta_times(x)), base_.R(x));
  }
  [[nodiscard]] Element theta_times(const Element& x) const { return base_.theta_times(x); }
  [[nodiscard]] bool equal(const Element& x, const Element& y) const { return base_.equal(x, y); }
  [[nodiscard]] std::string str(const Element& x) const { return base_.str(x); }

 private:
  M base_;
};

/// Parses "[[1+2t, 0],[t, 3]]" into a square polynomial matrix. Throws
/// ParseError on malformed text or a non-square shape.
PolyMatrix parse_poly_matrix(std::string_view text);
std::string format_poly_matrix(const PolyMatrix& m);

}  // namespace prelie
