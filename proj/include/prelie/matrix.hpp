#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prelie/rational.hpp"

namespace prelie {

/// Square d x d matrix over a ring of exact scalars (Rational, Polynomial,
/// Laurent). Row-major storage.
template <class Scalar>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  Matrix(std::size_t dim, std::vector<Scalar> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) throw std::invalid_argument("matrix entry count does not match dimension");
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = Scalar(1);
    return m;
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  [[nodiscard]] const std::vector<Scalar>& entries() const { return entries_; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& e : entries_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  template <class F>
  [[nodiscard]] auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(entries_.front()))>;
    std::vector<Out> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(f(e));
    return Matrix<Out>(dim_, std::move(out));
  }

  Matrix& operator+=(const Matrix& o) {
    check(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  Matrix& operator*=(const Rational& c) {
    for (auto& e : entries_) e *= c;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check(b);
    Matrix out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const Scalar& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < a.dim_; ++j) out(i, j) += x * b(k, j);
      }
    }
    return out;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// "[[e00, e01],[e10, e11]]" using the supplied entry printer.
  [[nodiscard]] std::string str(const std::function<std::string(const Scalar&)>& entry) const {
    std::string out = "[";
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i) out += ",";
      out += "[";
      for (std::size_t j = 0; j < dim_; ++j) {
        if (j) out += ", ";
        out += entry((*this)(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  void check(const Matrix& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<Scalar> entries_;
};

}  // namespace prelie
