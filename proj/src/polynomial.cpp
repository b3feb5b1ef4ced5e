#include "prelie/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace prelie {

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, int k) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Polynomial Polynomial::integral() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> v(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    v[k + 1] = coeffs_[k] / Rational(static_cast<std::int64_t>(k + 1));
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    v[k - 1] = coeffs_[k] * Rational(static_cast<std::int64_t>(k));
  }
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
  for (std::size_t k = a.coeffs_.size(); k-- > 0;) {
    if (auto c = a.coeffs_[k] <=> b.coeffs_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

std::string monomial_text(const Rational& magnitude, int k, std::string_view var) {
  std::string out;
  if (k == 0) return magnitude.str();
  if (!magnitude.is_one()) out = magnitude.str() + "*";
  out += var;
  if (k > 1) out += "^" + std::to_string(k);
  return out;
}

class PolyParser {
 public:
  PolyParser(std::string_view text, std::string_view var) : text_(text), var_(var) {}

  Polynomial run() {
    skip();
    bool wrapped = false;
    if (peek() == '(') {
      ++pos_;
      wrapped = true;
    }
    Polynomial p = sum();
    if (wrapped) {
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  Polynomial sum() {
    Polynomial acc;
    skip();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Polynomial t = term();
      acc += negative ? -t : t;
      skip();
      if (peek() != '+' && peek() != '-') break;
      negative = peek() == '-';
      ++pos_;
    }
    return acc;
  }

  Polynomial term() {
    skip();
    Rational c(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
      c = Rational::parse(text_.substr(start, pos_ - start));
      have_coeff = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (!at_var()) fail("expected variable after '*'");
      }
    }
    if (!at_var()) {
      if (!have_coeff) fail("expected a term");
      return Polynomial(c);
    }
    pos_ += var_.size();
    int k = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected exponent");
      k = std::stoi(std::string(text_.substr(start, pos_ - start)));
    }
    return Polynomial::monomial(c, k);
  }

  bool at_var() const { return text_.substr(pos_, var_.size()) == var_; }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos_) + ": " + what +
                                " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::string_view var) { return PolyParser(text, var).run(); }

std::string Polynomial::str(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += monomial_text(magnitude, static_cast<int>(k), var);
    first = false;
  }
  return out;
}

// --- Laurent ---------------------------------------------------------------

Laurent::Laurent(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

Laurent Laurent::monomial(const Rational& c, int k) {
  Laurent l;
  if (!c.is_zero()) l.terms_.emplace(k, c);
  return l;
}

Rational Laurent::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

Laurent Laurent::pole_part() const {
  Laurent l;
  for (const auto& [k, c] : terms_) {
    if (k < 0) l.terms_.emplace(k, c);
  }
  return l;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent& Laurent::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [i, x] : a.terms_) {
    for (const auto& [j, y] : b.terms_) out += Laurent::monomial(x * y, i + j);
  }
  return out;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += magnitude.str();
    } else {
      if (!magnitude.is_one()) out += magnitude.str() + "*";
      out += "z";
      if (k != 1) out += "^" + std::to_string(k);
    }
    first = false;
  }
  return out;
}

}  // namespace prelie
