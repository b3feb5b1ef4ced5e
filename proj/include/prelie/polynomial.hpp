#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "prelie/rational.hpp"

namespace prelie {

/// Dense univariate polynomial with rational coefficients. Used both for
/// time-dependent entries (variable t) and for formal weights (variable th).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(std::int64_t c) : Polynomial(Rational(c)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coefficients);

  /// The monomial c * var^k.
  static Polynomial monomial(const Rational& c, int k);
  static Polynomial variable() { return monomial(Rational(1), 1); }

  /// Parses sums of terms such as "1 + 2*t - 1/2*t^2", "3t", "(1+t)".
  static Polynomial parse(std::string_view text, std::string_view var);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree, or -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] Rational coefficient(int k) const;
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }

  [[nodiscard]] Rational evaluate(const Rational& x) const;
  [[nodiscard]] double evaluate(double x) const;
  /// Antiderivative vanishing at 0, i.e. the map p |-> int_0^t p(s) ds.
  [[nodiscard]] Polynomial integral() const;
  [[nodiscard]] Polynomial derivative() const;

  [[nodiscard]] std::string str(std::string_view var) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;  // coeffs_[k] multiplies var^k
};

/// Finite Laurent polynomial in z with rational coefficients.
class Laurent {
 public:
  Laurent() = default;
  Laurent(const Rational& c);  // NOLINT(google-explicit-constructor)
  Laurent(std::int64_t c) : Laurent(Rational(c)) {}  // NOLINT
  static Laurent monomial(const Rational& c, int k);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(int k) const;
  [[nodiscard]] const std::map<int, Rational>& terms() const { return terms_; }

  /// Part carried by strictly negative powers of z.
  [[nodiscard]] Laurent pole_part() const;
  [[nodiscard]] std::string str() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Rational& c);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(Laurent a) { return a *= Rational(-1); }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Rational& c, Laurent a) { return a *= c; }
  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  std::map<int, Rational> terms_;
};

}  // namespace prelie
