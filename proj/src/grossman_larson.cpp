#include "prelie/grossman_larson.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "prelie/combinatorics.hpp"

namespace prelie {

namespace {

using TreeVector = LinearCombination<Tree>;

TreeVector graft_tree(const Tree& t, const Tree& s) {
  TreeVector out;
  {
    std::vector<Tree> children = t.children();
    children.push_back(s);
    out.add(t.with_children(std::move(children)), Rational(1));
  }
  const auto& kids = t.children();
  for (std::size_t j = 0; j < kids.size(); ++j) {
    // identical siblings give identical results; count them once with multiplicity
    if (j > 0 && kids[j] == kids[j - 1]) continue;
    std::size_t mult = 1;
    while (j + mult < kids.size() && kids[j + mult] == kids[j]) ++mult;
    for (const auto& [g, c] : graft_tree(kids[j], s)) {
      std::vector<Tree> children = kids;
      children[j] = g;
      out.add(t.with_children(std::move(children)), c * Rational(static_cast<std::int64_t>(mult)));
    }
  }
  return out;
}

/// t <- (h_1 ... h_m): each h_i is attached under one vertex of t.
TreeVector tree_action(const Tree& t, std::span<const Tree> hs) {
  if (hs.empty()) return TreeVector(t);
  if (hs.size() == 1) return graft_tree(t, hs.front());
  const auto& kids = t.children();
  const std::size_t slots = kids.size() + 1;
  const std::size_t m = hs.size();
  std::vector<std::size_t> assign(m, 0);
  TreeVector out;
  for (;;) {
    std::vector<Tree> at_root;
    std::vector<std::vector<Tree>> per_child(kids.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (assign[i] == 0) {
        at_root.push_back(hs[i]);
      } else {
        per_child[assign[i] - 1].push_back(hs[i]);
      }
    }
    // expand the product over children of their individual actions
    std::vector<std::pair<std::vector<Tree>, Rational>> partial{{at_root, Rational(1)}};
    for (std::size_t j = 0; j < kids.size(); ++j) {
      const TreeVector sub = tree_action(kids[j], per_child[j]);
      std::vector<std::pair<std::vector<Tree>, Rational>> next;
      next.reserve(partial.size() * sub.size());
      for (const auto& [prefix, c] : partial) {
        for (const auto& [g, d] : sub) {
          auto v = prefix;
          v.push_back(g);
          next.emplace_back(std::move(v), c * d);
        }
      }
      partial = std::move(next);
    }
    for (auto& [children, c] : partial) out.add(t.with_children(std::move(children)), c);

    std::size_t i = 0;
    for (; i < m; ++i) {
      if (++assign[i] < slots) break;
      assign[i] = 0;
    }
    if (i == m) break;
  }
  return out;
}

GLVector as_gl(const TreeVector& v) {
  GLVector out;
  for (const auto& [t, c] : v) out.add(Forest(t), c);
  return out;
}

void require_trees(const GLVector& v, const char* what) {
  if (!is_tree_combination(v)) throw std::invalid_argument(std::string(what) + " must be a combination of trees");
}

/// Multiplies out prod_i (t_i <- H_i) for the given distribution of trees.
GLVector distribute(const Forest& base, const std::vector<Tree>& ts, const std::vector<std::vector<Tree>>& parts) {
  std::vector<std::pair<Forest, Rational>> partial{{base, Rational(1)}};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const TreeVector acted = tree_action(ts[i], parts[i]);
    std::vector<std::pair<Forest, Rational>> next;
    next.reserve(partial.size() * acted.size());
    for (const auto& [f, c] : partial) {
      for (const auto& [g, d] : acted) next.emplace_back(f * Forest(g), c * d);
    }
    partial = std::move(next);
  }
  GLVector out;
  for (auto& [f, c] : partial) out.add(std::move(f), c);
  return out;
}

}  // namespace

GLVector graft(const Tree& t, const Tree& s) { return as_gl(graft_tree(t, s)); }

GLVector graft(const GLVector& x, const GLVector& y) {
  require_trees(x, "left graft argument");
  require_trees(y, "right graft argument");
  GLVector out;
  for (const auto& [f, c] : x) {
    for (const auto& [g, d] : y) {
      for (const auto& [t, e] : graft_tree(f.trees().front(), g.trees().front())) out.add(Forest(t), c * d * e);
    }
  }
  return out;
}

std::vector<std::pair<Forest, Forest>> deshuffle(const Forest& f) {
  const auto& ts = f.trees();
  const std::size_t w = ts.size();
  std::vector<std::pair<Forest, Forest>> out;
  for (std::size_t mask = (std::size_t{1} << w); mask-- > 0;) {
    std::vector<Tree> left;
    std::vector<Tree> right;
    for (std::size_t i = 0; i < w; ++i) {
      if (mask & (std::size_t{1} << (w - 1 - i))) {
        left.push_back(ts[i]);
      } else {
        right.push_back(ts[i]);
      }
    }
    out.emplace_back(Forest(std::move(left)), Forest(std::move(right)));
  }
  return out;
}

GLTensor coproduct(const GLVector& v) {
  GLTensor out;
  for (const auto& [f, c] : v) {
    for (auto& pair : deshuffle(f)) out.add(std::move(pair), c);
  }
  return out;
}

GLTensor tensor_product(const GLVector& a, const GLVector& b) {
  GLTensor out;
  for (const auto& [f, c] : a) {
    for (const auto& [g, d] : b) out.add({f, g}, c * d);
  }
  return out;
}

GLVector forest_action(const Forest& f, const Forest& h) {
  if (h.is_unit()) return forest_vector(f);
  if (f.is_unit()) return {};
  const auto& ts = f.trees();
  const auto& hs = h.trees();
  const std::size_t n = ts.size();
  const std::size_t m = hs.size();
  std::vector<std::size_t> assign(m, 0);
  GLVector out;
  for (;;) {
    std::vector<std::vector<Tree>> parts(n);
    for (std::size_t i = 0; i < m; ++i) parts[assign[i]].push_back(hs[i]);
    out += distribute(Forest(), ts, parts);
    std::size_t i = 0;
    for (; i < m; ++i) {
      if (++assign[i] < n) break;
      assign[i] = 0;
    }
    if (i == m) break;
  }
  return out;
}

GLVector forest_action(const GLVector& f, const GLVector& h) {
  GLVector out;
  for (const auto& [x, c] : f) {
    for (const auto& [y, d] : h) out.add_scaled(forest_action(x, y), c * d);
  }
  return out;
}

GLVector gl_product(const Forest& f, const Forest& g) {
  if (g.is_unit()) return forest_vector(f);
  if (f.is_unit()) return forest_vector(g);
  const auto& ts = f.trees();
  const auto& gs = g.trees();
  const std::size_t n = ts.size();
  const std::size_t m = gs.size();
  std::vector<std::size_t> assign(m, 0);  // 0 = left as a factor, i = acts on t_i
  GLVector out;
  for (;;) {
    std::vector<Tree> spare;
    std::vector<std::vector<Tree>> parts(n);
    for (std::size_t i = 0; i < m; ++i) {
      if (assign[i] == 0) {
        spare.push_back(gs[i]);
      } else {
        parts[assign[i] - 1].push_back(gs[i]);
      }
    }
    out += distribute(Forest(std::move(spare)), ts, parts);
    std::size_t i = 0;
    for (; i < m; ++i) {
      if (++assign[i] <= n) break;
      assign[i] = 0;
    }
    if (i == m) break;
  }
  return out;
}

GLVector gl_product(const GLVector& f, const GLVector& g) {
  GLVector out;
  for (const auto& [x, c] : f) {
    for (const auto& [y, d] : g) out.add_scaled(gl_product(x, y), c * d);
  }
  return out;
}

GLVector brace(const Tree& l, const Forest& f) { return forest_action(Forest(l), f); }

GLVector block_graft(std::span<const GLVector> ts, const std::vector<int>& block) {
  const std::size_t h = block.size();
  if (h == 0) throw std::invalid_argument("empty block");
  const GLVector& innermost = ts[static_cast<std::size_t>(block.back() - 1)];
  if (h == 1) return innermost;
  std::vector<int> rest(block.begin(), block.end() - 1);
  GLVector out;
  std::sort(rest.begin(), rest.end());
  do {
    GLVector inner = innermost;
    for (std::size_t j = rest.size(); j-- > 0;) inner = graft(ts[static_cast<std::size_t>(rest[j] - 1)], inner);
    out += inner;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

GLVector expand_product(std::span<const GLVector> ls) {
  const int n = static_cast<int>(ls.size());
  if (n == 0) throw std::invalid_argument("expand_forest needs at least one tree");
  for (const auto& l : ls) require_trees(l, "expansion argument");
  // many chains share blocks
  std::map<Block, GLVector> blocks;
  auto block_value = [&](const Block& b) -> const GLVector& {
    auto it = blocks.find(b);
    if (it == blocks.end()) it = blocks.emplace(b, block_graft(ls, b)).first;
    return it->second;
  };
  GLVector out;
  for (const auto& chain : admissible_partition_chains(n)) {
    GLVector term = unit_vector();
    for (const auto& block : chain.blocks) term = gl_product(term, block_value(block));
    const int k = static_cast<int>(chain.blocks.size());
    out.add_scaled(term, Rational((n - k) % 2 == 0 ? 1 : -1));
  }
  return out;
}

GLVector expand_forest(std::span<const Tree> ts) {
  std::vector<GLVector> ls;
  ls.reserve(ts.size());
  for (const auto& t : ts) ls.push_back(tree_vector(t));
  return expand_product(ls);
}

GLVector brace_closed_form(const Tree& l, std::span<const Tree> ls) {
  const int n = static_cast<int>(ls.size());
  if (n == 0) return tree_vector(l);
  std::vector<GLVector> args;
  args.reserve(ls.size());
  for (const auto& t : ls) args.push_back(tree_vector(t));
  GLVector out;
  for (const auto& chain : admissible_partition_chains(n)) {
    GLVector term = tree_vector(l);
    for (const auto& block : chain.blocks) term = graft(term, block_graft(args, block));
    const int k = static_cast<int>(chain.blocks.size());
    out.add_scaled(term, Rational((n - k) % 2 == 0 ? 1 : -1));
  }
  return out;
}

// --- GLSeries ----------------------------------------------------------------

GLSeries::GLSeries(std::size_t truncation) : truncation_(truncation), components_(truncation + 1) {}

GLSeries::GLSeries(const GLVector& v, std::size_t truncation) : GLSeries(truncation) {
  for (const auto& [f, c] : v) {
    if (f.degree() <= truncation_) components_[f.degree()].add(f, c);
  }
}

void GLSeries::set_component(std::size_t d, GLVector v) {
  for (const auto& [f, c] : v) {
    if (f.degree() != d) throw std::invalid_argument("forest of degree " + std::to_string(f.degree()) +
                                                     " placed in component " + std::to_string(d));
  }
  components_.at(d) = std::move(v);
}

GLVector GLSeries::total() const {
  GLVector out;
  for (const auto& c : components_) out += c;
  return out;
}

void GLSeries::check(const GLSeries& o) const {
  if (o.truncation_ != truncation_) throw std::invalid_argument("series truncation degrees differ");
}

GLSeries& GLSeries::operator+=(const GLSeries& o) {
  check(o);
  for (std::size_t d = 0; d <= truncation_; ++d) components_[d] += o.components_[d];
  return *this;
}

GLSeries& GLSeries::operator-=(const GLSeries& o) {
  check(o);
  for (std::size_t d = 0; d <= truncation_; ++d) components_[d] -= o.components_[d];
  return *this;
}

GLSeries& GLSeries::operator*=(const Rational& c) {
  for (auto& comp : components_) comp *= c;
  return *this;
}

GLSeries GLSeries::multiply(const GLSeries& o, ProductMode mode) const {
  check(o);
  GLSeries out(truncation_);
  for (std::size_t i = 0; i <= truncation_; ++i) {
    if (components_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= truncation_; ++j) {
      if (o.components_[j].is_zero()) continue;
      out.components_[i + j] += mode == ProductMode::star ? gl_product(components_[i], o.components_[j])
                                                          : commutative_product(components_[i], o.components_[j]);
    }
  }
  return out;
}

GLSeries gl_exp(const GLSeries& v, ProductMode mode) {
  if (!v.component(0).is_zero()) throw std::invalid_argument("exponential needs a zero degree-0 component");
  const std::size_t n = v.truncation();
  GLSeries out(GLVector(unit_vector()), n);
  GLSeries power = out;
  for (std::size_t k = 1; k <= n; ++k) {
    power = power.multiply(v, mode);
    power *= Rational(1, static_cast<std::int64_t>(k));
    out += power;
  }
  return out;
}

GLSeries gl_log(const GLSeries& v, ProductMode mode) {
  if (v.component(0) != unit_vector()) throw std::invalid_argument("logarithm needs degree-0 component equal to e");
  const std::size_t n = v.truncation();
  GLSeries u = v;
  u.set_component(0, GLVector());
  GLSeries out(n);
  GLSeries power = u;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) power = power.multiply(u, mode);
    out += Rational(k % 2 == 1 ? 1 : -1, static_cast<std::int64_t>(k)) * power;
  }
  return out;
}

}  // namespace prelie
