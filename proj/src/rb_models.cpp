#include "prelie/rb_models.hpp"

#include <cctype>
#include <stdexcept>

#include "prelie/enumeration.hpp"
#include "prelie/gl_vector.hpp"

namespace prelie {

// --- MatrixPolyModel ---------------------------------------------------------

MatrixPolyModel::Element MatrixPolyModel::integrate(const Element& x) {
  return x.map([](const Polynomial& p) { return p.integral(); });
}

std::string MatrixPolyModel::str(const Element& x) const { return format_poly_matrix(x); }

MatrixPolyModel::Element MatrixPolyModel::random(std::mt19937_64& rng, int max_degree) const {
  Element m(dim_);
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      Polynomial p;
      const int d = deg(rng);
      for (int k = 0; k <= d; ++k) {
        if (rng() % 4 != 0) p += Polynomial::monomial(random_rational(rng), k);
      }
      m(i, j) = p;
    }
  }
  return m;
}

// --- MatrixSeqModel ----------------------------------------------------------

void MatrixSeqModel::check(const Element& x) const {
  if (x.size() != length_) throw std::invalid_argument("sequence length does not match the model");
}

MatrixSeqModel::Element MatrixSeqModel::add(const Element& x, const Element& y) const {
  check(x);
  check(y);
  Element out(x);
  for (std::size_t n = 0; n < length_; ++n) out[n] += y[n];
  return out;
}

MatrixSeqModel::Element MatrixSeqModel::sub(const Element& x, const Element& y) const {
  check(x);
  check(y);
  Element out(x);
  for (std::size_t n = 0; n < length_; ++n) out[n] -= y[n];
  return out;
}

MatrixSeqModel::Element MatrixSeqModel::mul(const Element& x, const Element& y) const {
  check(x);
  check(y);
  Element out;
  out.reserve(length_);
  for (std::size_t n = 0; n < length_; ++n) out.push_back(x[n] * y[n]);
  return out;
}

MatrixSeqModel::Element MatrixSeqModel::scale(const Rational& q, const Element& x) const {
  check(x);
  Element out(x);
  for (auto& m : out) m *= q;
  return out;
}

MatrixSeqModel::Element MatrixSeqModel::R(const Element& x) const {
  check(x);
  Element out = zero();
  Matrix<Rational> partial(dim_);
  for (std::size_t n = 0; n < length_; ++n) {
    out[n] = theta_ * partial;
    partial += x[n];
  }
  return out;
}

std::string MatrixSeqModel::str(const Element& x) const {
  std::string out = "(";
  for (std::size_t n = 0; n < x.size(); ++n) {
    if (n) out += "; ";
    out += x[n].str([](const Rational& q) { return q.str(); });
  }
  return out + ")";
}

MatrixSeqModel::Element MatrixSeqModel::random(std::mt19937_64& rng) const {
  Element out = zero();
  for (auto& m : out) {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) m(i, j) = rng() % 5 == 0 ? Rational(0) : random_rational(rng);
    }
  }
  return out;
}

// --- LaurentPoleModel --------------------------------------------------------

LaurentPoleModel::Element LaurentPoleModel::R(const Element& x) const {
  return x.map([](const Laurent& l) { return l.pole_part(); });
}

std::string LaurentPoleModel::str(const Element& x) const {
  return x.str([](const Laurent& l) { return l.str(); });
}

LaurentPoleModel::Element LaurentPoleModel::random(std::mt19937_64& rng, int min_power, int max_power) const {
  Element m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      Laurent l;
      for (int k = min_power; k <= max_power; ++k) {
        if (rng() % 3 != 0) l += Laurent::monomial(random_rational(rng), k);
      }
      m(i, j) = l;
    }
  }
  return m;
}

// --- Matrix text format ------------------------------------------------------

PolyMatrix parse_poly_matrix(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  std::vector<std::vector<Polynomial>> rows;
  expect('[');
  for (;;) {
    expect('[');
    std::vector<Polynomial> row;
    for (;;) {
      skip();
      const std::size_t start = pos;
      int depth = 0;
      while (pos < text.size() && (depth > 0 || (text[pos] != ',' && text[pos] != ']'))) {
        if (text[pos] == '(') ++depth;
        if (text[pos] == ')') --depth;
        ++pos;
      }
      if (pos >= text.size()) throw ParseError("unterminated matrix row", pos);
      try {
        row.push_back(Polynomial::parse(text.substr(start, pos - start), "t"));
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad matrix entry: ") + e.what(), start);
      }
      if (text[pos] == ']') {
        ++pos;
        break;
      }
      ++pos;  // ','
    }
    rows.push_back(std::move(row));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    expect(']');
    break;
  }
  skip();
  if (pos != text.size()) throw ParseError("unexpected text after matrix", pos);
  const std::size_t d = rows.size();
  std::vector<Polynomial> entries;
  for (auto& r : rows) {
    if (r.size() != d) throw ParseError("matrix is not square", 0);
    for (auto& p : r) entries.push_back(std::move(p));
  }
  return PolyMatrix(d, std::move(entries));
}

std::string format_poly_matrix(const PolyMatrix& m) {
  return m.str([](const Polynomial& p) { return p.str("t"); });
}

}  // namespace prelie
