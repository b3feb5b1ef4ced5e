#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "prelie/linear_combination.hpp"
#include "prelie/polynomial.hpp"

namespace prelie {

/// Word in the free Rota-Baxter algebra: a sequence of atoms, each either a
/// letter or R applied to a word. The empty word is the unit 1, and R(1) is
/// the wrapped empty word. Words built by RBExpr arithmetic are reduced (no
/// two adjacent wrapped atoms, recursively); raw words produced by the
/// rewriting engine may not be.
class RBWord {
 public:
  struct Atom;

  RBWord();
  explicit RBWord(std::vector<Atom> atoms);
  static RBWord letter(std::string name);
  static RBWord wrap(const RBWord& inner);

  [[nodiscard]] const std::vector<Atom>& atoms() const;
  [[nodiscard]] bool empty() const;
  [[nodiscard]] std::size_t hash() const;
  /// Letters plus applications of R, counted through all nesting levels.
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] std::size_t letter_count() const;
  [[nodiscard]] bool starts_wrapped() const;
  [[nodiscard]] bool ends_wrapped() const;
  [[nodiscard]] bool is_reduced() const;

  /// "R(b1 R(b2)) b3"; the empty word prints as "1".
  [[nodiscard]] std::string str() const;

  friend RBWord operator+(const RBWord& a, const RBWord& b);  // concatenation
  friend bool operator==(const RBWord& a, const RBWord& b);
  friend std::strong_ordering operator<=>(const RBWord& a, const RBWord& b);
  friend std::ostream& operator<<(std::ostream& os, const RBWord& w) { return os << w.str(); }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct RBWord::Atom {
  std::string letter;  // empty for a wrapped atom
  RBWord inner;
  bool wrapped = false;

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct RBWord::Node {
  std::vector<Atom> atoms;
  std::size_t hash = 0;
  std::size_t size = 0;
  std::size_t letters = 0;
};

inline const std::vector<RBWord::Atom>& RBWord::atoms() const { return node_->atoms; }
inline bool RBWord::empty() const { return node_->atoms.empty(); }
inline std::size_t RBWord::hash() const { return node_->hash; }
inline std::size_t RBWord::size() const { return node_->size; }
inline std::size_t RBWord::letter_count() const { return node_->letters; }

/// Element of the free Rota-Baxter algebra with formal weight th: a finite
/// combination of reduced words with coefficients in Q[th].
class RBExpr {
 public:
  using Terms = LinearCombination<RBWord, Polynomial>;

  RBExpr() = default;
  explicit RBExpr(Terms terms) : terms_(std::move(terms)) {}
  static RBExpr unit();
  static RBExpr letter(std::string name);
  /// The formal weight as a scalar multiple of the unit.
  static RBExpr theta();

  [[nodiscard]] bool is_zero() const { return terms_.is_zero(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  /// Textual form, e.g. "(-1 + 2*th)*R(b1) b2 + R(R(b1) b2)".
  [[nodiscard]] std::string str() const;
  /// Parses any expression (see RBTerm::parse) and reduces it.
  static RBExpr parse(std::string_view text);

  RBExpr& operator+=(const RBExpr& o) {
    terms_ += o.terms_;
    return *this;
  }
  RBExpr& operator-=(const RBExpr& o) {
    terms_ -= o.terms_;
    return *this;
  }
  RBExpr& operator*=(const Polynomial& c) {
    terms_ *= c;
    return *this;
  }
  friend RBExpr operator+(RBExpr a, const RBExpr& b) { return a += b; }
  friend RBExpr operator-(RBExpr a, const RBExpr& b) { return a -= b; }
  friend RBExpr operator-(RBExpr a) { return a *= Polynomial(-1); }
  friend RBExpr operator*(const Polynomial& c, RBExpr a) { return a *= c; }
  /// Associative product; concatenates words and rewrites every junction
  /// R(u)R(v) -> R(R(u)v) + R(uR(v)) + th R(uv) until the result is reduced.
  friend RBExpr operator*(const RBExpr& a, const RBExpr& b);
  friend bool operator==(const RBExpr&, const RBExpr&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RBExpr& x) { return os << x.str(); }

 private:
  Terms terms_;
};

/// The Rota-Baxter operator of the free algebra (linear, wraps every word).
RBExpr rota(const RBExpr& x);

/// Unreduced expression tree: what a user writes before normalization.
class RBTerm {
 public:
  enum class Kind { letter, number, theta, sum, product, rota };

  static RBTerm letter(std::string name);
  static RBTerm number(Rational value);
  static RBTerm theta();
  static RBTerm sum(std::vector<RBTerm> args);
  static RBTerm product(std::vector<RBTerm> args);
  static RBTerm rota(RBTerm arg);

  /// Grammar: sums of products of factors; a factor is a letter identifier,
  /// a rational number, th, R(...), or a parenthesized sum. Juxtaposition or
  /// '*' multiplies. Throws ParseError with the offending offset.
  static RBTerm parse(std::string_view text);

  [[nodiscard]] Kind kind() const { return node_->kind; }
  [[nodiscard]] const std::string& name() const { return node_->name; }
  [[nodiscard]] const Rational& value() const { return node_->value; }
  [[nodiscard]] const std::vector<RBTerm>& args() const { return node_->args; }
  [[nodiscard]] std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    Rational value;
    std::vector<RBTerm> args;
  };
  explicit RBTerm(Node node);
  std::shared_ptr<const Node> node_;
};

/// Order in which the rewriting engine picks the next redex R(u)R(v).
enum class RewriteOrder { leftmost_outermost, rightmost_innermost };

/// Distributes the term into raw words and rewrites redexes one at a time in
/// the given order until none is left.
RBExpr rb_normal_form(const RBTerm& term, RewriteOrder order);
/// Evaluates the term with RBExpr arithmetic, folding products from the left
/// (or from the right when fold_right is set).
RBExpr rb_evaluate(const RBTerm& term, bool fold_right = false);

/// Random unreduced term over the given letters, with nested products,
/// sums and applications of R up to the given depth.
RBTerm random_rb_term(std::mt19937_64& rng, int depth, const std::vector<std::string>& letters);

}  // namespace prelie
