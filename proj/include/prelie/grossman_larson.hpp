#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "prelie/gl_vector.hpp"
#include "prelie/tree.hpp"

namespace prelie {

/// Sum over vertices v of t of the tree obtained by attaching the root of s
/// under v.
GLVector graft(const Tree& t, const Tree& s);
/// Bilinear extension of graft to combinations of trees. Throws
/// std::invalid_argument if either side contains a forest of weight != 1.
GLVector graft(const GLVector& x, const GLVector& y);

/// All 2^w(F) splittings of the trees of F into an ordered pair (H1, H2).
/// Repeated trees produce repeated entries.
std::vector<std::pair<Forest, Forest>> deshuffle(const Forest& f);

/// Coproduct on GL with trees primitive, as a combination of tensor pairs.
using GLTensor = LinearCombination<std::pair<Forest, Forest>>;
GLTensor coproduct(const GLVector& v);
GLTensor tensor_product(const GLVector& a, const GLVector& b);

/// Action of forests on forests: t <- (h_1...h_m) attaches every h_i under
/// some vertex of t independently; a product of trees distributes H through
/// its coproduct; F <- e = F and e <- H = 0 for nonempty H.
GLVector forest_action(const Forest& f, const Forest& h);
GLVector forest_action(const GLVector& f, const GLVector& h);

/// Grossman-Larson product
///   (t_1...t_n) * (s_1...s_m) = sum_f F_0 (t_1 <- F_1) ... (t_n <- F_n)
/// over all maps f : {1..m} -> {0..n}, F_i the product of the s_j with f(j)=i.
GLVector gl_product(const Forest& f, const Forest& g);
GLVector gl_product(const GLVector& f, const GLVector& g);

/// Symmetric brace {l; F} = l <- F.
GLVector brace(const Tree& l, const Forest& f);

/// Block element t_P for a block p_1 < ... < p_h of indices into ts (1-based):
///   sum_{sigma in S_{h-1}} t_{p_sigma(1)} <- (t_{p_sigma(2)} <- (... <- t_{p_h})).
GLVector block_graft(std::span<const GLVector> ts, const std::vector<int>& block);

/// Rewrites the commutative product t_1...t_n as
///   sum over admissible chains (P_1..P_k) of (-1)^(n-k) t_{P_1} * ... * t_{P_k}.
/// The returned value equals the forest t_1...t_n. Throws for n = 0.
GLVector expand_forest(std::span<const Tree> ts);
/// Same expansion for arbitrary combinations of trees (multilinear).
GLVector expand_product(std::span<const GLVector> ls);

/// sum over admissible chains of (-1)^(n-k) (((l <- l_{P_1}) <- l_{P_2}) ... <- l_{P_k}).
GLVector brace_closed_form(const Tree& l, std::span<const Tree> ls);

enum class ProductMode { commutative, star };

/// Element of GL truncated above a fixed degree; component d holds the
/// forests with d vertices.
class GLSeries {
 public:
  explicit GLSeries(std::size_t truncation);
  /// Splits v by degree; components above the truncation are dropped.
  GLSeries(const GLVector& v, std::size_t truncation);

  [[nodiscard]] std::size_t truncation() const { return truncation_; }
  [[nodiscard]] const GLVector& component(std::size_t d) const { return components_.at(d); }
  void set_component(std::size_t d, GLVector v);
  /// Sum of all components.
  [[nodiscard]] GLVector total() const;

  GLSeries& operator+=(const GLSeries& o);
  GLSeries& operator-=(const GLSeries& o);
  GLSeries& operator*=(const Rational& c);
  friend GLSeries operator+(GLSeries a, const GLSeries& b) { return a += b; }
  friend GLSeries operator-(GLSeries a, const GLSeries& b) { return a -= b; }
  friend GLSeries operator*(const Rational& c, GLSeries a) { return a *= c; }
  friend bool operator==(const GLSeries&, const GLSeries&) = default;

  /// Truncated product in the chosen mode.
  [[nodiscard]] GLSeries multiply(const GLSeries& o, ProductMode mode) const;

 private:
  void check(const GLSeries& o) const;
  std::size_t truncation_;
  std::vector<GLVector> components_;
};

/// sum_k v^k / k! with k-fold powers in the given product. Requires a zero
/// degree-0 component.
GLSeries gl_exp(const GLSeries& v, ProductMode mode);
/// sum_k (-1)^(k+1) u^k / k for v = e + u. Requires the degree-0 component to
/// be exactly the unit e.
GLSeries gl_log(const GLSeries& v, ProductMode mode);

}  // namespace prelie
