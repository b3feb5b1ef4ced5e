#include "prelie/enumeration.hpp"

#include <algorithm>
#include <functional>

namespace prelie {

namespace {

/// Multisets of trees (drawn from pool, canonical order) with total degree d,
/// using only pool entries at index >= start.
void forests_from(const std::vector<Tree>& pool, std::size_t start, std::size_t d, std::vector<Tree>& prefix,
                  std::vector<Forest>& out) {
  if (d == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (pool[i].size() > d) break;  // pool is sorted by size first
    prefix.push_back(pool[i]);
    forests_from(pool, i, d - pool[i].size(), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Tree> all_trees_up_to(std::size_t max_vertices, const std::vector<std::string>& alphabet) {
  std::vector<Tree> pool;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    // branch forests of degree n-1 only use trees already in the pool
    std::vector<Forest> branches;
    std::vector<Tree> prefix;
    forests_from(pool, 0, n - 1, prefix, branches);
    std::vector<Tree> level;
    for (const auto& label : alphabet) {
      for (const auto& f : branches) level.emplace_back(label, f.trees());
    }
    std::sort(level.begin(), level.end());
    pool.insert(pool.end(), level.begin(), level.end());
  }
  return pool;
}

std::vector<Tree> all_trees(std::size_t vertices, const std::vector<std::string>& alphabet) {
  std::vector<Tree> out;
  for (auto& t : all_trees_up_to(vertices, alphabet)) {
    if (t.size() == vertices) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Forest> all_forests(std::size_t degree, const std::vector<std::string>& alphabet) {
  const auto pool = all_trees_up_to(degree, alphabet);
  std::vector<Forest> out;
  std::vector<Tree> prefix;
  forests_from(pool, 0, degree, prefix, out);
  return out;
}

Tree random_tree(std::mt19937_64& rng, std::size_t vertices, const std::vector<std::string>& alphabet) {
  std::uniform_int_distribution<std::size_t> pick_label(0, alphabet.size() - 1);
  std::vector<std::size_t> parent(vertices, 0);
  for (std::size_t v = 1; v < vertices; ++v) parent[v] = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
  std::vector<std::string> labels(vertices);
  for (auto& l : labels) l = alphabet[pick_label(rng)];
  std::vector<std::vector<std::size_t>> kids(vertices);
  for (std::size_t v = 1; v < vertices; ++v) kids[parent[v]].push_back(v);
  std::function<Tree(std::size_t)> build = [&](std::size_t v) {
    std::vector<Tree> children;
    for (auto k : kids[v]) children.push_back(build(k));
    return Tree(labels[v], std::move(children));
  };
  return build(0);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::bernoulli_distribution neg(0.5);
  const int p = num(rng);
  return Rational(neg(rng) ? -p : p, den(rng));
}

GLVector random_tree_combination(std::mt19937_64& rng, std::size_t terms, std::size_t max_vertices,
                                 const std::vector<std::string>& alphabet) {
  std::uniform_int_distribution<std::size_t> size(1, max_vertices);
  GLVector out;
  for (std::size_t i = 0; i < terms; ++i) out.add(Forest(random_tree(rng, size(rng), alphabet)), random_rational(rng));
  return out;
}

}  // namespace prelie
