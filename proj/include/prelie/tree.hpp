#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace prelie {

/// Non-planar rooted tree whose vertices carry decorations (identifiers).
///
/// Trees are immutable and always stored in canonical form: the children of
/// every vertex are sorted by the total order implemented by operator<=>,
/// which compares vertex count, then root decoration, then the sorted child
/// lists lexicographically. Two trees are equal iff they are isomorphic as
/// decorated rooted trees. Copies share structure.
class Tree {
 public:
  explicit Tree(std::string root, std::vector<Tree> children = {});

  [[nodiscard]] const std::string& root() const { return node_->root; }
  [[nodiscard]] const std::vector<Tree>& children() const { return node_->children; }
  /// Number of vertices.
  [[nodiscard]] std::size_t size() const { return node_->size; }
  [[nodiscard]] std::size_t hash() const { return node_->hash; }
  [[nodiscard]] bool is_leaf() const { return node_->children.empty(); }

  /// Canonical serialization, e.g. "a[b,c[d]]".
  [[nodiscard]] std::string str() const;

  /// Same root decoration, children replaced by the given multiset.
  [[nodiscard]] Tree with_children(std::vector<Tree> children) const { return Tree(root(), std::move(children)); }

  friend bool operator==(const Tree& a, const Tree& b);
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);
  friend std::ostream& operator<<(std::ostream& os, const Tree& t) { return os << t.str(); }

 private:
  struct Node {
    std::string root;
    std::vector<Tree> children;
    std::size_t size;
    std::size_t hash;
  };
  std::shared_ptr<const Node> node_;
};

/// Commutative product of trees; the empty forest is the unit e.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Tree> trees);
  explicit Forest(Tree tree);

  [[nodiscard]] const std::vector<Tree>& trees() const { return trees_; }
  /// Number of trees, w(F).
  [[nodiscard]] std::size_t weight() const { return trees_.size(); }
  /// Total vertex count, deg(F).
  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] bool is_unit() const { return trees_.empty(); }
  [[nodiscard]] std::size_t hash() const;

  /// "a.b[c]"; the unit prints as "e".
  [[nodiscard]] std::string str() const;

  friend Forest operator*(const Forest& a, const Forest& b);
  friend bool operator==(const Forest& a, const Forest& b) = default;
  /// Degree first, then weight, then the sorted tree lists.
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);
  friend std::ostream& operator<<(std::ostream& os, const Forest& f) { return os << f.str(); }

 private:
  std::vector<Tree> trees_;
  std::size_t degree_ = 0;
};

}  // namespace prelie

template <>
struct std::hash<prelie::Tree> {
  std::size_t operator()(const prelie::Tree& t) const noexcept { return t.hash(); }
};

template <>
struct std::hash<prelie::Forest> {
  std::size_t operator()(const prelie::Forest& f) const noexcept { return f.hash(); }
};
