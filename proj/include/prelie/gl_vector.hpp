#pragma once

#include <cstddef>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "prelie/linear_combination.hpp"
#include "prelie/rational.hpp"
#include "prelie/tree.hpp"

namespace prelie {

/// Element of GL: rational combination of forests, graded by vertex count.
using GLVector = LinearCombination<Forest>;

/// Set of admissible decorations. An open alphabet accepts any identifier.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<std::string> symbols) : symbols_(symbols), open_(false) {}
  explicit Alphabet(std::set<std::string> symbols) : symbols_(std::move(symbols)), open_(false) {}
  static Alphabet open() { return {}; }

  [[nodiscard]] bool contains(const std::string& s) const { return open_ || symbols_.contains(s); }
  [[nodiscard]] bool is_open() const { return open_; }
  [[nodiscard]] const std::set<std::string>& symbols() const { return symbols_; }

 private:
  std::set<std::string> symbols_;
  bool open_ = true;
};

/// Syntax error in an expression; carries the byte offset of the failure.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Raised when a decoration is not in the declared alphabet.
class UnknownDecoration : public std::runtime_error {
 public:
  explicit UnknownDecoration(const std::string& symbol)
      : std::runtime_error("unknown decoration '" + symbol + "'"), symbol_(symbol) {}
  [[nodiscard]] const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

/// element := term (('+'|'-') term)* ; term := [coeff '*'] forest ;
/// forest := tree ('.' tree)* | 'e' ; tree := ident ['[' tree (',' tree)* ']'].
/// The literal "0" is the zero vector.
GLVector parse_element(std::string_view text, const Alphabet& alphabet = Alphabet::open());
Tree parse_tree(std::string_view text, const Alphabet& alphabet = Alphabet::open());

/// Canonical text: terms sorted by degree, then by serialization.
std::string format_element(const GLVector& v);

GLVector tree_vector(const Tree& t, const Rational& c = Rational(1));
GLVector forest_vector(const Forest& f, const Rational& c = Rational(1));
/// The unit e.
GLVector unit_vector();

/// Bilinear extension of the commutative forest product.
GLVector commutative_product(const GLVector& a, const GLVector& b);

/// Degree-d component.
GLVector degree_component(const GLVector& v, std::size_t d);
/// Maximal degree present; 0 for the zero vector.
std::size_t max_degree(const GLVector& v);
/// Drops every forest of degree > n.
GLVector truncate(const GLVector& v, std::size_t n);

/// True iff every forest in v is a single tree.
bool is_tree_combination(const GLVector& v);

}  // namespace prelie
