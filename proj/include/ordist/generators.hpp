#pragma once

#include "ordist/circular.hpp"
#include "ordist/distance_matrix.hpp"
#include "ordist/split_system.hpp"

#include <cstdint>
#include <random>

namespace ordist {

/// Seeded generator. Draws go through uniform() so sequences are identical across
/// standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return lo + engine_() % (hi - lo + 1);
  }
  bool coin() { return engine_() & 1; }
  template <class It>
  void shuffle(It first, It last) {
    for (auto n = last - first; n > 1; --n) std::iter_swap(first + (n - 1), first + uniform(0, n - 1));
  }

 private:
  std::mt19937_64 engine_;
};

/// Off-diagonal entries drawn uniformly from {1, 2}.
DistanceMatrix random_one_two_matrix(std::size_t n, Rng& rng);

/// Off-diagonal entries uniform in [1, max_value]; small max_value produces many ties.
DistanceMatrix random_positive_matrix(std::size_t n, std::uint64_t max_value, Rng& rng);

/// Uniformly shuffled 0..n-1.
std::vector<Element> random_permutation(std::size_t n, Rng& rng);

/// Binary X-tree on n >= 3 leaves (2n-3 splits), weights uniform in [1, max_weight].
WeightedSplitSystem random_binary_tree(const GroundSet& ground, std::uint64_t max_weight, Rng& rng);

/// All C(n,2) interval splits of a random ordering, weights uniform in [min_weight, max_weight].
struct RandomCircular {
  CircularOrdering ordering;
  WeightedSplitSystem system;
};
RandomCircular random_maximum_circular(const GroundSet& ground, std::uint64_t min_weight,
                                       std::uint64_t max_weight, Rng& rng);

}  // namespace ordist
