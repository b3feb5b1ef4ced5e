#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prelie/combinatorics.hpp"
#include "prelie/gl_vector.hpp"
#include "prelie/rb_ops.hpp"

namespace prelie {

/// Sum over orderings of all but the last index of
///   x_{p_s(1)} <| (x_{p_s(2)} <| ( ... <| x_{p_h})),
/// the block element of the admissible-chain expansions, with <| the right
/// pre-Lie product of the model.
template <RotaBaxterModel M>
typename M::Element right_block(const M& m, std::span<const typename M::Element> xs, const Block& block) {
  auto innermost = xs[static_cast<std::size_t>(block.back() - 1)];
  if (block.size() == 1) return innermost;
  std::vector<int> rest(block.begin(), block.end() - 1);
  std::sort(rest.begin(), rest.end());
  auto out = m.zero();
  do {
    auto inner = innermost;
    for (std::size_t j = rest.size(); j-- > 0;) inner = pre_lie_right(m, xs[static_cast<std::size_t>(rest[j] - 1)], inner);
    out = m.add(out, inner);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

/// Image of GL in a Rota-Baxter model: the algebra map sending a decoration
/// to its assigned element, grafting to <|, and the Grossman-Larson product
/// to the double product. Trees are evaluated through the closed brace
/// formula, forests through the admissible-chain expansion of the
/// commutative product; the empty forest goes to the unit.
template <RotaBaxterModel M>
class GLEmbedding {
 public:
  using Element = typename M::Element;

  GLEmbedding(M model, std::map<std::string, Element> letters)
      : model_(std::move(model)), letters_(std::move(letters)) {}

  [[nodiscard]] const M& model() const { return model_; }

  /// Throws UnknownDecoration for a decoration without assigned element.
  Element operator()(const GLVector& v) const {
    auto out = model_.zero();
    for (const auto& [f, c] : v) out = model_.add(out, model_.scale(c, forest(f)));
    return out;
  }

  Element forest(const Forest& f) const {
    if (f.is_unit()) return model_.one();
    std::vector<Element> xs;
    for (const auto& t : f.trees()) xs.push_back(tree(t));
    if (xs.size() == 1) return xs[0];
    return chain_sum(xs, [&](const Element& acc, const Element& b) { return double_product(model_, acc, b); },
                     std::nullopt);
  }

  Element tree(const Tree& t) const {
    if (auto it = cache_.find(t); it != cache_.end()) return it->second;
    auto letter = letters_.find(t.root());
    if (letter == letters_.end()) throw UnknownDecoration(t.root());
    Element out = letter->second;
    if (!t.is_leaf()) {
      std::vector<Element> xs;
      for (const auto& c : t.children()) xs.push_back(tree(c));
      out = chain_sum(xs, [&](const Element& acc, const Element& b) { return pre_lie_right(model_, acc, b); },
                      letter->second);
    }
    cache_.emplace(t, out);
    return out;
  }

 private:
  /// sum over admissible chains of (-1)^(n-k) op(...op(op(start, X_{P_1}), X_{P_2})..., X_{P_k});
  /// without a start value the fold begins at X_{P_1}.
  template <class Op>
  Element chain_sum(const std::vector<Element>& xs, Op op, const std::optional<Element>& start) const {
    const int n = static_cast<int>(xs.size());
    auto out = model_.zero();
    for (const auto& chain : admissible_partition_chains(n)) {
      std::optional<Element> acc = start;
      for (const auto& block : chain.blocks) {
        auto b = right_block<M>(model_, xs, block);
        acc = acc ? op(*acc, b) : b;
      }
      const int k = static_cast<int>(chain.blocks.size());
      out = (n - k) % 2 == 0 ? model_.add(out, *acc) : model_.sub(out, *acc);
    }
    return out;
  }

  M model_;
  std::map<std::string, Element> letters_;
  mutable std::map<Tree, Element> cache_;
};

/// One-shot convenience wrapper around GLEmbedding.
template <RotaBaxterModel M>
typename M::Element iota(const M& m, const GLVector& v, const std::map<std::string, typename M::Element>& letters) {
  return GLEmbedding<M>(m, letters)(v);
}

}  // namespace prelie
