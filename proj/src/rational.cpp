#include "prelie/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace prelie {

namespace {

using Wide = __int128;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(Wide x) {
  return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(Wide x) {
  const bool negative = x < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  mpz_class out(static_cast<unsigned long>(u >> 64));
  out <<= 64;
  out += mpz_class(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
  return negative ? mpz_class(-out) : out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  *this = from_gmp(std::move(v));
}

Rational Rational::from_wide(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  Rational out;
  if (fits(num) && fits(den)) {
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(den);
  } else {
    out.big_ = std::make_shared<const mpq_class>(to_mpz(num), to_mpz(den));
  }
  return out;
}

Rational Rational::from_gmp(mpq_class value) {
  Rational out;
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    out.num_ = n.get_si();
    out.den_ = d.get_si();
  } else {
    out.big_ = std::make_shared<const mpq_class>(std::move(value));
  }
  return out;
}

mpq_class Rational::gmp() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Rational& Rational::operator+=(const Rational& o) {
  if (big_ || o.big_) return *this = from_gmp(gmp() + o.gmp());
  if (den_ == o.den_) return *this = from_wide(static_cast<Wide>(num_) + o.num_, den_);
  return *this = from_wide(static_cast<Wide>(num_) * o.den_ + static_cast<Wide>(o.num_) * den_,
                           static_cast<Wide>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (big_ || o.big_) return *this = from_gmp(gmp() * o.gmp());
  return *this = from_wide(static_cast<Wide>(num_) * o.num_, static_cast<Wide>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (big_ || o.big_) return *this = from_gmp(gmp() / o.gmp());
  return *this = from_wide(static_cast<Wide>(num_) * o.den_, static_cast<Wide>(den_) * o.num_);
}

Rational operator-(const Rational& a) {
  if (a.big_) return Rational::from_gmp(-*a.big_);
  return Rational::from_wide(-static_cast<Wide>(a.num_), a.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    const int c = cmp(a.gmp(), b.gmp());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return static_cast<Wide>(a.num_) * b.den_ <=> static_cast<Wide>(b.num_) * a.den_;
}

Rational Rational::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const { return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_); }

std::string Rational::numerator_str() const { return big_ ? big_->get_num().get_str() : std::to_string(num_); }
std::string Rational::denominator_str() const { return big_ ? big_->get_den().get_str() : std::to_string(den_); }

Rational factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(mpq_class(f));
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(b));
}

Rational power(const Rational& q, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= q;
  return r;
}

}  // namespace prelie
