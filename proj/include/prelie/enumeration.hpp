#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "prelie/gl_vector.hpp"
#include "prelie/tree.hpp"

namespace prelie {

/// Every decorated tree with exactly `vertices` vertices, in canonical order.
std::vector<Tree> all_trees(std::size_t vertices, const std::vector<std::string>& alphabet);
/// Every tree with 1..max_vertices vertices.
std::vector<Tree> all_trees_up_to(std::size_t max_vertices, const std::vector<std::string>& alphabet);
/// Every forest of total degree `degree` (the unit e for degree 0).
std::vector<Forest> all_forests(std::size_t degree, const std::vector<std::string>& alphabet);

/// Uniform random attachment tree with the given vertex count.
Tree random_tree(std::mt19937_64& rng, std::size_t vertices, const std::vector<std::string>& alphabet);
/// Random combination of `terms` trees with up to `max_vertices` vertices and
/// small integer-ratio coefficients.
GLVector random_tree_combination(std::mt19937_64& rng, std::size_t terms, std::size_t max_vertices,
                                 const std::vector<std::string>& alphabet);
/// Small nonzero rational p/q with |p| <= 5, 1 <= q <= 4.
Rational random_rational(std::mt19937_64& rng);

}  // namespace prelie
