#include "prelie/gl_vector.hpp"

#include <algorithm>
#include <cctype>
#include <utility>
#include <vector>

namespace prelie {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ElementParser {
 public:
  ElementParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  GLVector element() {
    skip();
    if (peek() == '0') {
      const std::size_t save = pos_;
      ++pos_;
      skip();
      if (pos_ == text_.size()) return {};
      pos_ = save;
    }
    GLVector out;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      auto [c, f] = term();
      out.add(std::move(f), negative ? -c : c);
      skip();
      if (peek() != '+' && peek() != '-') break;
      negative = peek() == '-';
      ++pos_;
    }
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

  Tree single_tree() {
    skip();
    Tree t = tree();
    skip();
    if (pos_ != text_.size()) fail("unexpected character after tree");
    return t;
  }

 private:
  std::pair<Rational, Forest> term() {
    skip();
    Rational c(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = coefficient();
      skip();
      if (peek() != '*') fail("expected '*' after coefficient");
      ++pos_;
      skip();
    }
    return {c, forest()};
  }

  Rational coefficient() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string text(text_.substr(start, pos_ - start));
    if (peek() == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (dstart == pos_) fail("expected denominator");
      const std::string den(text_.substr(dstart, pos_ - dstart));
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
      text += "/" + den;
    }
    return Rational::parse(text);
  }

  Forest forest() {
    skip();
    const std::size_t save = pos_;
    if (identifier_at() == "e") {
      pos_ += 1;
      skip();
      if (peek() == '.' || peek() == '[') {
        pos_ = save;
        fail("'e' denotes the empty forest and cannot be used as a decoration");
      }
      return Forest();
    }
    std::vector<Tree> trees;
    trees.push_back(tree());
    skip();
    while (peek() == '.') {
      ++pos_;
      trees.push_back(tree());
      skip();
    }
    return Forest(std::move(trees));
  }

  Tree tree() {
    skip();
    const std::size_t start = pos_;
    std::string label(identifier_at());
    if (label.empty()) fail("expected decoration");
    if (label == "e") fail("'e' is reserved for the empty forest");
    if (!alphabet_.contains(label)) {
      pos_ = start;
      throw UnknownDecoration(label);
    }
    pos_ += label.size();
    std::vector<Tree> children;
    skip();
    if (peek() == '[') {
      ++pos_;
      children.push_back(tree());
      skip();
      while (peek() == ',') {
        ++pos_;
        children.push_back(tree());
        skip();
      }
      if (peek() != ']') fail("expected ']'");
      ++pos_;
    }
    return Tree(std::move(label), std::move(children));
  }

  std::string_view identifier_at() const {
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) return {};
    std::size_t end = pos_ + 1;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    return text_.substr(pos_, end - pos_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

GLVector parse_element(std::string_view text, const Alphabet& alphabet) {
  return ElementParser(text, alphabet).element();
}

Tree parse_tree(std::string_view text, const Alphabet& alphabet) { return ElementParser(text, alphabet).single_tree(); }

std::string format_element(const GLVector& v) {
  if (v.is_zero()) return "0";
  std::vector<std::pair<std::size_t, std::string>> keys;
  std::vector<const Rational*> coeffs;
  std::vector<std::size_t> order;
  for (const auto& [f, c] : v) {
    keys.emplace_back(f.degree(), f.str());
    coeffs.push_back(&c);
  }
  order.resize(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  std::string out;
  bool first = true;
  for (std::size_t i : order) {
    const Rational& c = *coeffs[i];
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!magnitude.is_one()) out += magnitude.str() + "*";
    out += keys[i].second;
    first = false;
  }
  return out;
}

GLVector tree_vector(const Tree& t, const Rational& c) { return GLVector(Forest(t), c); }
GLVector forest_vector(const Forest& f, const Rational& c) { return GLVector(f, c); }
GLVector unit_vector() { return GLVector(Forest()); }

GLVector commutative_product(const GLVector& a, const GLVector& b) {
  GLVector out;
  for (const auto& [f, x] : a) {
    for (const auto& [g, y] : b) out.add(f * g, x * y);
  }
  return out;
}

GLVector degree_component(const GLVector& v, std::size_t d) {
  GLVector out;
  for (const auto& [f, c] : v) {
    if (f.degree() == d) out.add(f, c);
  }
  return out;
}

std::size_t max_degree(const GLVector& v) {
  std::size_t d = 0;
  for (const auto& [f, c] : v) d = std::max(d, f.degree());
  return d;
}

GLVector truncate(const GLVector& v, std::size_t n) {
  GLVector out;
  for (const auto& [f, c] : v) {
    if (f.degree() <= n) out.add(f, c);
  }
  return out;
}

bool is_tree_combination(const GLVector& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& kv) { return kv.first.weight() == 1; });
}

}  // namespace prelie
