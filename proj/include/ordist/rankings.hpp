#pragma once

#include "ordist/distance_matrix.hpp"
#include "ordist/rational.hpp"

#include <cstdint>
#include <vector>

namespace ordist {

/// A ranking with ties: an ordered list of blocks that partition the ground set.
class PartialRanking {
 public:
  /// Throws std::invalid_argument unless the blocks are non-empty and partition the ground set.
  PartialRanking(GroundSet ground, std::vector<std::vector<Element>> blocks);

  const GroundSet& ground() const { return ground_; }
  const std::vector<std::vector<Element>>& blocks() const { return blocks_; }
  /// Index of the block holding each element.
  const std::vector<std::size_t>& block_index() const { return block_index_; }
  std::size_t size() const { return block_index_.size(); }

  /// Same blocks in reverse order.
  PartialRanking reversed() const;

  bool operator==(const PartialRanking& other) const {
    return ground_ == other.ground_ && block_index_ == other.block_index_;
  }

 private:
  GroundSet ground_;
  std::vector<std::vector<Element>> blocks_;
  std::vector<std::size_t> block_index_;
};

/// Elements grouped by equal distance from x, nearest block first.
PartialRanking ranking_from_distance(const DistanceMatrix& d, Element x);

/// Pair statistics behind the penalized Kendall distance.
struct KendallCounts {
  std::uint64_t discordant = 0;    ///< strictly opposite order in the two rankings
  std::uint64_t tied_in_one = 0;   ///< tied in exactly one ranking
  bool operator==(const KendallCounts&) const = default;
};

/// O(n log n): sort by (block in r1, block in r2) and count strict inversions by merge sort.
KendallCounts kendall_counts(const PartialRanking& r1, const PartialRanking& r2);
/// O(n^2) enumeration of all item pairs.
KendallCounts kendall_counts_naive(const PartialRanking& r1, const PartialRanking& r2);

/// K^pi(r1, r2) = discordant + pi * tied_in_one. Throws on ground-set mismatch or pi < 0.
Rational kendall_penalized(const PartialRanking& r1, const PartialRanking& r2, const Rational& pi);
Rational kendall_penalized_naive(const PartialRanking& r1, const PartialRanking& r2,
                                 const Rational& pi);

}  // namespace ordist
