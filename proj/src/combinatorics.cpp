#include "prelie/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "prelie/mutation.hpp"

namespace prelie {

namespace testing {

namespace {
Mutant g_mutant = Mutant::none;
}

Mutant active_mutant() { return g_mutant; }

ScopedMutant::ScopedMutant(Mutant m) : previous_(g_mutant) { g_mutant = m; }
ScopedMutant::~ScopedMutant() { g_mutant = previous_; }

}  // namespace testing

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()));
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::vector<int> Permutation::descent_set() const {
  std::vector<int> out;
  for (int i = 1; i < size(); ++i) {
    if ((*this)(i) > (*this)(i + 1)) out.push_back(i);
  }
  return out;
}

std::vector<int> Permutation::record_positions() const {
  std::vector<int> out;
  int best = 0;
  for (int i = 1; i <= size(); ++i) {
    if ((*this)(i) > best) {
      best = (*this)(i);
      out.push_back(i);
    }
  }
  return out;
}

std::string Permutation::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(images_[i]);
  }
  return out + ")";
}

std::vector<Cycle> canonical_cycle_decomposition(const Permutation& sigma) {
  std::vector<Cycle> cycles;
  int best = 0;
  for (int x : sigma.images()) {
    if (x > best) {
      best = x;
      cycles.emplace_back();
    }
    cycles.back().push_back(x);
  }
  return cycles;
}

Permutation flatten_cycles(const std::vector<Cycle>& cycles) {
  std::vector<int> v;
  for (const auto& c : cycles) v.insert(v.end(), c.begin(), c.end());
  return Permutation(std::move(v));
}

std::string format_cycles(const std::vector<Cycle>& cycles) {
  int n = 0;
  for (const auto& c : cycles) n += static_cast<int>(c.size());
  const bool commas = n > 9;
  std::string out;
  for (const auto& c : cycles) {
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i && commas) out += ",";
      out += std::to_string(c[i]);
    }
    out += ")";
  }
  return out;
}

int PartitionChain::size() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

std::string PartitionChain::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ",";
    out += "{";
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(blocks[i][j]);
    }
    out += "}";
  }
  return out + ")";
}

bool is_admissible(const PartitionChain& chain) {
  for (std::size_t i = 1; i < chain.blocks.size(); ++i) {
    if (chain.blocks[i - 1].back() >= chain.blocks[i].back()) return false;
  }
  return true;
}

std::vector<std::vector<Block>> set_partitions(int n) {
  std::vector<std::vector<Block>> out;
  if (n < 0) return out;
  // restricted growth strings a_1..a_n with a_1 = 0, a_i <= 1 + max(a_1..a_{i-1})
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto emit = [&] {
    int k = n == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<Block> blocks(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
    out.push_back(std::move(blocks));
  };
  if (n == 0) {
    emit();
    return out;
  }
  for (;;) {
    emit();
    int i = n - 1;
    for (; i > 0; --i) {
      const int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[static_cast<std::size_t>(i)] <= prefix_max) {
        ++rgs[static_cast<std::size_t>(i)];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

std::vector<PartitionChain> admissible_partition_chains(int n) {
  if (n < 1) throw std::invalid_argument("admissible partition chains need n >= 1");
  const bool flipped = testing::active_mutant() == testing::Mutant::admissibility_order;
  auto before = [flipped](const Block& a, const Block& b) { return flipped ? a.back() > b.back() : a.back() < b.back(); };
  std::vector<PartitionChain> out;
  for (auto& blocks : set_partitions(n)) {
    std::sort(blocks.begin(), blocks.end(), before);
    out.push_back(PartitionChain{std::move(blocks)});
  }
  return out;
}

std::uint64_t bell_number(int n) {
  // Bell triangle
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  if (n < 1) return out;
  // bitmask over the n-1 possible cut points, ordered to give lexicographic output
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    Composition c;
    int part = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (std::uint64_t{1} << (n - 2 - i))) {
        c.push_back(part);
        part = 1;
      } else {
        ++part;
      }
    }
    c.push_back(part);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational c_coefficient(const Composition& c) {
  if (c.empty()) throw std::invalid_argument("c-coefficient of an empty composition");
  int partial = 0;
  Rational denom(1);
  for (int s : c) {
    if (s < 1) throw std::invalid_argument("composition parts must be positive");
    partial += s;
    denom *= Rational(partial);
  }
  Rational value = factorial(partial) / denom;
  if (testing::active_mutant() == testing::Mutant::c_coefficient_sign && c == Composition{1, 1}) value = -value;
  return value;
}

Rational bernoulli_number(int n) {
  if (n < 0) throw std::invalid_argument("Bernoulli index must be nonnegative");
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= n; ++m) {
    Rational acc(0);
    for (int j = 0; j < m; ++j) acc += binomial(m + 1, j) * b[static_cast<std::size_t>(j)];
    b.push_back(-acc / Rational(m + 1));
  }
  Rational value = b[static_cast<std::size_t>(n)];
  if (n == 1 && testing::active_mutant() == testing::Mutant::bernoulli_b1_sign) value = -value;
  return value;
}

std::string format_composition(const Composition& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + ")";
}

}  // namespace prelie
