#include "prelie/tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace prelie {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Tree::Tree(std::string root, std::vector<Tree> children) {
  if (root.empty()) throw std::invalid_argument("tree decoration must be nonempty");
  std::sort(children.begin(), children.end());
  std::size_t size = 1;
  std::size_t h = std::hash<std::string>{}(root);
  for (const auto& c : children) {
    size += c.size();
    h = mix(h, c.hash());
  }
  h = mix(h, size);
  node_ = std::make_shared<const Node>(Node{std::move(root), std::move(children), size, h});
}

std::string Tree::str() const {
  std::string out = root();
  if (!children().empty()) {
    out += "[";
    bool first = true;
    for (const auto& c : children()) {
      if (!first) out += ",";
      out += c.str();
      first = false;
    }
    out += "]";
  }
  return out;
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.root().compare(b.root()); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const auto& x = a.children();
  const auto& y = b.children();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end());
  for (const auto& t : trees_) degree_ += t.size();
}

Forest::Forest(Tree tree) : degree_(tree.size()) { trees_.push_back(std::move(tree)); }

std::size_t Forest::hash() const {
  std::size_t h = trees_.size();
  for (const auto& t : trees_) h = mix(h, t.hash());
  return h;
}

std::string Forest::str() const {
  if (trees_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i) out += ".";
    out += trees_[i].str();
  }
  return out;
}

Forest operator*(const Forest& a, const Forest& b) {
  Forest out;
  out.trees_.reserve(a.trees_.size() + b.trees_.size());
  std::merge(a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end(), std::back_inserter(out.trees_));
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  if (auto c = a.trees_.size() <=> b.trees_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end());
}

}  // namespace prelie
