#include "prelie/rb_free.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <utility>

#include "prelie/gl_vector.hpp"

namespace prelie {

namespace {

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

const RBWord& empty_word() {
  static const RBWord w;
  return w;
}

}  // namespace

// --- RBWord ------------------------------------------------------------------

RBWord::RBWord() : RBWord(std::vector<Atom>{}) {}

RBWord::RBWord(std::vector<Atom> atoms) {
  auto node = std::make_shared<Node>();
  std::size_t h = 0x51ed;
  for (const auto& a : atoms) {
    if (a.wrapped) {
      h = mix(h, mix(0x7a, a.inner.hash()));
      node->size += 1 + a.inner.size();
      node->letters += a.inner.letter_count();
    } else {
      h = mix(h, std::hash<std::string>{}(a.letter));
      node->size += 1;
      node->letters += 1;
    }
  }
  node->hash = h;
  node->atoms = std::move(atoms);
  node_ = std::move(node);
}

RBWord RBWord::letter(std::string name) { return RBWord({Atom{std::move(name), empty_word(), false}}); }

RBWord RBWord::wrap(const RBWord& inner) { return RBWord({Atom{"", inner, true}}); }

bool RBWord::starts_wrapped() const { return !empty() && atoms().front().wrapped; }
bool RBWord::ends_wrapped() const { return !empty() && atoms().back().wrapped; }

bool RBWord::is_reduced() const {
  const auto& as = atoms();
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (!as[i].wrapped) continue;
    if (i + 1 < as.size() && as[i + 1].wrapped) return false;
    if (!as[i].inner.is_reduced()) return false;
  }
  return true;
}

std::string RBWord::str() const {
  if (empty()) return "1";
  std::string out;
  for (const auto& a : atoms()) {
    if (!out.empty()) out += ' ';
    out += a.wrapped ? "R(" + a.inner.str() + ")" : a.letter;
  }
  return out;
}

RBWord operator+(const RBWord& a, const RBWord& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<RBWord::Atom> atoms = a.atoms();
  atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
  return RBWord(std::move(atoms));
}

bool operator==(const RBWord& a, const RBWord& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  return a.atoms() == b.atoms();
}

std::strong_ordering operator<=>(const RBWord& a, const RBWord& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.letter_count() <=> b.letter_count(); c != 0) return c;
  const auto& x = a.atoms();
  const auto& y = b.atoms();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i].wrapped != y[i].wrapped) return x[i].wrapped ? std::strong_ordering::greater : std::strong_ordering::less;
    if (x[i].wrapped) {
      if (auto c = x[i].inner <=> y[i].inner; c != 0) return c;
    } else if (auto c = x[i].letter.compare(y[i].letter); c != 0) {
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return x.size() <=> y.size();
}

// --- RBExpr ------------------------------------------------------------------

namespace {

using Terms = RBExpr::Terms;

RBWord drop_back(const RBWord& w) {
  return RBWord(std::vector<RBWord::Atom>(w.atoms().begin(), w.atoms().end() - 1));
}
RBWord drop_front(const RBWord& w) {
  return RBWord(std::vector<RBWord::Atom>(w.atoms().begin() + 1, w.atoms().end()));
}

/// Reduced product of two reduced words.
Terms multiply_words(const RBWord& x, const RBWord& y) {
  if (!x.ends_wrapped() || !y.starts_wrapped()) return Terms(x + y);
  const RBWord& u = x.atoms().back().inner;
  const RBWord& v = y.atoms().front().inner;
  const RBWord ru = RBWord::wrap(u);
  const RBWord rv = RBWord::wrap(v);
  // R(u)R(v) = R(R(u)v + uR(v) + th uv); the inner products are smaller.
  Terms inner = multiply_words(ru, v);
  inner += multiply_words(u, rv);
  inner.add_scaled(multiply_words(u, v), Polynomial::variable());
  const RBWord prefix = drop_back(x);
  const RBWord suffix = drop_front(y);
  Terms out;
  for (const auto& [w, c] : inner) out.add(prefix + RBWord::wrap(w) + suffix, c);
  return out;
}

}  // namespace

RBExpr RBExpr::unit() { return RBExpr(Terms(RBWord())); }
RBExpr RBExpr::letter(std::string name) { return RBExpr(Terms(RBWord::letter(std::move(name)))); }
RBExpr RBExpr::theta() { return RBExpr(Terms(RBWord(), Polynomial::variable())); }

RBExpr operator*(const RBExpr& a, const RBExpr& b) {
  Terms out;
  for (const auto& [x, c] : a.terms_) {
    for (const auto& [y, d] : b.terms_) out.add_scaled(multiply_words(x, y), c * d);
  }
  return RBExpr(std::move(out));
}

RBExpr rota(const RBExpr& x) {
  Terms out;
  for (const auto& [w, c] : x.terms()) out.add(RBWord::wrap(w), c);
  return RBExpr(std::move(out));
}

std::string RBExpr::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    std::string term;
    if (c.is_constant()) {
      const Rational q = c.coefficient(0);
      if (w.empty()) {
        term = q.str();
      } else if (q == Rational(1)) {
        term = w.str();
      } else if (q == Rational(-1)) {
        term = "-" + w.str();
      } else {
        term = q.str() + "*" + w.str();
      }
    } else {
      term = "(" + c.str("th") + ")";
      if (!w.empty()) term += "*" + w.str();
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

RBExpr RBExpr::parse(std::string_view text) { return rb_evaluate(RBTerm::parse(text)); }

// --- RBTerm ------------------------------------------------------------------

RBTerm::RBTerm(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

RBTerm RBTerm::letter(std::string name) { return RBTerm(Node{Kind::letter, std::move(name), Rational(0), {}}); }
RBTerm RBTerm::number(Rational value) { return RBTerm(Node{Kind::number, "", std::move(value), {}}); }
RBTerm RBTerm::theta() { return RBTerm(Node{Kind::theta, "", Rational(0), {}}); }
RBTerm RBTerm::sum(std::vector<RBTerm> args) { return RBTerm(Node{Kind::sum, "", Rational(0), std::move(args)}); }
RBTerm RBTerm::product(std::vector<RBTerm> args) {
  return RBTerm(Node{Kind::product, "", Rational(0), std::move(args)});
}
RBTerm RBTerm::rota(RBTerm arg) { return RBTerm(Node{Kind::rota, "", Rational(0), {std::move(arg)}}); }

std::string RBTerm::str() const {
  switch (kind()) {
    case Kind::letter:
      return name();
    case Kind::number:
      return value().sign() < 0 ? "(" + value().str() + ")" : value().str();
    case Kind::theta:
      return "th";
    case Kind::rota:
      return "R(" + args()[0].str() + ")";
    case Kind::sum: {
      if (args().empty()) return "0";
      std::string out = "(";
      for (std::size_t i = 0; i < args().size(); ++i) out += (i ? " + " : "") + args()[i].str();
      return out + ")";
    }
    case Kind::product: {
      if (args().empty()) return "1";
      std::string out;
      for (std::size_t i = 0; i < args().size(); ++i) out += (i ? " " : "") + args()[i].str();
      return out;
    }
  }
  return {};
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  RBTerm parse() {
    RBTerm t = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return t;
  }

 private:
  RBTerm sum() {
    std::vector<RBTerm> parts;
    skip();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      RBTerm p = product();
      parts.push_back(negative ? RBTerm::product({RBTerm::number(Rational(-1)), p}) : p);
      skip();
      if (peek() != '+' && peek() != '-') break;
      negative = peek() == '-';
      ++pos_;
    }
    return parts.size() == 1 ? parts[0] : RBTerm::sum(std::move(parts));
  }

  RBTerm product() {
    std::vector<RBTerm> factors{factor()};
    for (;;) {
      skip();
      if (peek() == '*') {
        ++pos_;
        factors.push_back(factor());
      } else if (starts_factor(peek())) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    return factors.size() == 1 ? factors[0] : RBTerm::product(std::move(factors));
  }

  static bool starts_factor(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  RBTerm factor() {
    skip();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RBTerm inner = sum();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RBTerm::number(number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "th") return RBTerm::theta();
      if (name == "R") {
        skip();
        expect('(');
        RBTerm inner = sum();
        expect(')');
        return RBTerm::rota(std::move(inner));
      }
      return RBTerm::letter(std::move(name));
    }
    fail(c == '\0' ? "unexpected end of input" : "expected a factor");
  }

  Rational number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (peek() == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      const std::string den(text_.substr(dstart, pos_ - dstart));
      if (den.empty()) fail("expected denominator");
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
      digits += "/" + den;
    }
    return Rational::parse(digits);
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[nodiscard]] char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RBTerm RBTerm::parse(std::string_view text) { return TermParser(text).parse(); }

// --- Normal forms ------------------------------------------------------------

RBExpr rb_evaluate(const RBTerm& term, bool fold_right) {
  switch (term.kind()) {
    case RBTerm::Kind::letter:
      return RBExpr::letter(term.name());
    case RBTerm::Kind::number:
      return Polynomial(term.value()) * RBExpr::unit();
    case RBTerm::Kind::theta:
      return RBExpr::theta();
    case RBTerm::Kind::rota:
      return rota(rb_evaluate(term.args()[0], fold_right));
    case RBTerm::Kind::sum: {
      RBExpr out;
      for (const auto& a : term.args()) out += rb_evaluate(a, fold_right);
      return out;
    }
    case RBTerm::Kind::product: {
      const auto& args = term.args();
      if (args.empty()) return RBExpr::unit();
      if (fold_right) {
        RBExpr out = rb_evaluate(args.back(), true);
        for (std::size_t i = args.size() - 1; i-- > 0;) out = rb_evaluate(args[i], true) * out;
        return out;
      }
      RBExpr out = rb_evaluate(args.front(), false);
      for (std::size_t i = 1; i < args.size(); ++i) out = out * rb_evaluate(args[i], false);
      return out;
    }
  }
  return {};
}

namespace {

/// Distributes sums and scalars without applying any rewrite.
Terms expand_raw(const RBTerm& term) {
  switch (term.kind()) {
    case RBTerm::Kind::letter:
      return Terms(RBWord::letter(term.name()));
    case RBTerm::Kind::number:
      return Terms(RBWord(), Polynomial(term.value()));
    case RBTerm::Kind::theta:
      return Terms(RBWord(), Polynomial::variable());
    case RBTerm::Kind::rota: {
      Terms out;
      for (const auto& [w, c] : expand_raw(term.args()[0])) out.add(RBWord::wrap(w), c);
      return out;
    }
    case RBTerm::Kind::sum: {
      Terms out;
      for (const auto& a : term.args()) out += expand_raw(a);
      return out;
    }
    case RBTerm::Kind::product: {
      Terms out(RBWord{});
      for (const auto& a : term.args()) {
        const Terms factor = expand_raw(a);
        Terms next;
        for (const auto& [x, c] : out) {
          for (const auto& [y, d] : factor) next.add(x + y, c * d);
        }
        out = std::move(next);
      }
      return out;
    }
  }
  return {};
}

/// One rewrite step at the first redex in the chosen order, or nothing if the
/// word is already reduced.
std::optional<Terms> rewrite_once(const RBWord& w, RewriteOrder order) {
  const auto& as = w.atoms();
  const std::size_t n = as.size();
  auto top_level = [&](std::size_t i) {
    const RBWord& u = as[i].inner;
    const RBWord& v = as[i + 1].inner;
    const RBWord prefix(std::vector<RBWord::Atom>(as.begin(), as.begin() + static_cast<std::ptrdiff_t>(i)));
    const RBWord suffix(std::vector<RBWord::Atom>(as.begin() + static_cast<std::ptrdiff_t>(i) + 2, as.end()));
    Terms out;
    out.add(prefix + RBWord::wrap(RBWord::wrap(u) + v) + suffix, Polynomial(1));
    out.add(prefix + RBWord::wrap(u + RBWord::wrap(v)) + suffix, Polynomial(1));
    out.add(prefix + RBWord::wrap(u + v) + suffix, Polynomial::variable());
    return out;
  };
  auto nested = [&](std::size_t i) -> std::optional<Terms> {
    if (!as[i].wrapped) return std::nullopt;
    auto inner = rewrite_once(as[i].inner, order);
    if (!inner) return std::nullopt;
    Terms out;
    for (const auto& [v, c] : *inner) {
      auto atoms = as;
      atoms[i] = RBWord::Atom{"", v, true};
      out.add(RBWord(std::move(atoms)), c);
    }
    return out;
  };
  if (order == RewriteOrder::leftmost_outermost) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (as[i].wrapped && as[i + 1].wrapped) return top_level(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (auto r = nested(i)) return r;
    }
  } else {
    for (std::size_t i = n; i-- > 0;) {
      if (auto r = nested(i)) return r;
    }
    for (std::size_t i = n; i-- > 1;) {
      if (as[i - 1].wrapped && as[i].wrapped) return top_level(i - 1);
    }
  }
  return std::nullopt;
}

}  // namespace

RBExpr rb_normal_form(const RBTerm& term, RewriteOrder order) {
  Terms pending = expand_raw(term);
  Terms done;
  while (!pending.is_zero()) {
    Terms next;
    for (const auto& [w, c] : pending) {
      if (auto r = rewrite_once(w, order)) {
        next.add_scaled(*r, c);
      } else {
        done.add(w, c);
      }
    }
    pending = std::move(next);
  }
  return RBExpr(std::move(done));
}

RBTerm random_rb_term(std::mt19937_64& rng, int depth, const std::vector<std::string>& letters) {
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 1 : 5);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  switch (kind(rng)) {
    case 0:
    case 1:
      return RBTerm::letter(letters[pick(rng)]);
    case 2:
    case 3:
      return RBTerm::rota(random_rb_term(rng, depth - 1, letters));
    case 4: {
      const int arity = 2 + static_cast<int>(rng() % 2);
      std::vector<RBTerm> fs;
      for (int i = 0; i < arity; ++i) fs.push_back(random_rb_term(rng, depth - 1, letters));
      return RBTerm::product(std::move(fs));
    }
    default: {
      std::vector<RBTerm> parts{random_rb_term(rng, depth - 1, letters), random_rb_term(rng, depth - 1, letters)};
      if (rng() % 3 == 0) parts.push_back(RBTerm::product({RBTerm::theta(), random_rb_term(rng, depth - 1, letters)}));
      if (rng() % 3 == 0) parts[0] = RBTerm::product({RBTerm::number(Rational(-1, 2)), parts[0]});
      return RBTerm::sum(std::move(parts));
    }
  }
}

}  // namespace prelie
