#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "prelie/rational.hpp"

namespace prelie {

/// Bijection of {1..n} in one-line notation.
class Permutation {
 public:
  /// Throws std::invalid_argument unless images is a permutation of 1..n.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// All of S_n in lexicographic order.
  static std::vector<Permutation> all(int n);

  [[nodiscard]] int size() const { return static_cast<int>(images_.size()); }
  /// sigma(i), 1-based.
  [[nodiscard]] int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  [[nodiscard]] const std::vector<int>& images() const { return images_; }
  [[nodiscard]] Permutation inverse() const;

  /// Positions i with sigma(i) > sigma(i+1).
  [[nodiscard]] std::vector<int> descent_set() const;
  /// Positions of strict left-to-right maxima.
  [[nodiscard]] std::vector<int> record_positions() const;

  /// "(3,2,5,4,1)"
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

using Cycle = std::vector<int>;

/// Cuts the one-line word of sigma at its record positions. Each cycle starts
/// with its maximum and cycle maxima increase from left to right.
std::vector<Cycle> canonical_cycle_decomposition(const Permutation& sigma);
/// Inverse of canonical_cycle_decomposition: concatenates the cycles.
Permutation flatten_cycles(const std::vector<Cycle>& cycles);
/// "(32)(541)(6)(87)"; entries are comma separated once n exceeds 9.
std::string format_cycles(const std::vector<Cycle>& cycles);

using Block = std::vector<int>;

/// Ordered set partition (P_1, ..., P_k) of [n]; blocks sorted ascending.
struct PartitionChain {
  std::vector<Block> blocks;

  [[nodiscard]] int size() const;
  [[nodiscard]] std::string str() const;
  friend bool operator==(const PartitionChain&, const PartitionChain&) = default;
  friend auto operator<=>(const PartitionChain&, const PartitionChain&) = default;
};

/// max(P_1) < max(P_2) < ... < max(P_k).
bool is_admissible(const PartitionChain& chain);

/// Unordered set partitions of [n], blocks ascending and listed by minimum.
std::vector<std::vector<Block>> set_partitions(int n);

/// The ordered partitions of [n] with strictly increasing block maxima, one
/// per set partition. Throws std::invalid_argument for n < 1.
std::vector<PartitionChain> admissible_partition_chains(int n);

std::uint64_t bell_number(int n);

using Composition = std::vector<int>;

/// All compositions of n, in lexicographic order.
std::vector<Composition> compositions(int n);

/// c(s_1..s_k) = n! / prod_j (s_1 + ... + s_j). Throws on an empty or
/// non-positive composition.
Rational c_coefficient(const Composition& c);

/// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli_number(int n);

std::string format_composition(const Composition& c);

}  // namespace prelie
