#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "prelie/rational.hpp"

namespace prelie {

/// Finite formal linear combination sum_k c_k * key_k. Zero coefficients are
/// never stored, so two combinations are equal iff their maps are equal.
template <class Key, class Coeff = Rational>
class LinearCombination {
 public:
  using Terms = std::map<Key, Coeff>;

  LinearCombination() = default;
  explicit LinearCombination(Key key, Coeff c = Coeff(1)) { add(std::move(key), std::move(c)); }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] auto begin() const { return terms_.begin(); }
  [[nodiscard]] auto end() const { return terms_.end(); }

  [[nodiscard]] Coeff coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add(Key key, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += c * other
  void add_scaled(const LinearCombination& other, const Coeff& c) {
    if (c.is_zero()) return;
    for (const auto& [k, x] : other.terms_) add(k, x * c);
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, x] : o.terms_) add(k, x);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, x] : o.terms_) add(k, -x);
    return *this;
  }
  LinearCombination& operator*=(const Coeff& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, x] : terms_) x = x * c;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Coeff(-1); }
  friend LinearCombination operator*(const Coeff& c, LinearCombination a) { return a *= c; }
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  Terms terms_;
};

}  // namespace prelie
