#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace prelie {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Values whose numerator and denominator fit in 64 bits are
/// stored inline; anything larger lives in a GMP mpq_class. The choice is
/// canonical (a value is big iff it does not fit), so equality can compare
/// representations directly.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  /// Parses "n", "-n" or "n/d". Throws std::invalid_argument on malformed
  /// text and std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  [[nodiscard]] int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

  [[nodiscard]] std::string str() const;
  [[nodiscard]] double to_double() const;
  [[nodiscard]] mpq_class gmp() const;
  [[nodiscard]] std::string numerator_str() const;
  [[nodiscard]] std::string denominator_str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_gmp(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;  // set iff the value does not fit
};

Rational factorial(int n);
Rational binomial(int n, int k);
/// q^k for k >= 0.
Rational power(const Rational& q, int k);

}  // namespace prelie
