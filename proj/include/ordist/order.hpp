#pragma once

#include "ordist/distance_matrix.hpp"
#include "ordist/split_system.hpp"

#include <array>
#include <cstdint>
#include <map>

namespace ordist {

/// X = X_{u,v} ∪ X_{v,u} ∪ E_{u,v}: elements strictly closer to u, strictly closer to v,
/// and equidistant.
struct PairPartition {
  Element u;
  Element v;
  ElementSet closer_to_u;
  ElementSet closer_to_v;
  ElementSet equidistant;
};

/// Throws std::invalid_argument if u == v.
PairPartition pair_partition(const DistanceMatrix& d, Element u, Element v);

/// Index sets of the order-distance sums, aggregated by split.
struct MidpathDecomposition {
  GroundSet ground;
  /// S_{u,v} -> number of ordered pairs (u,v) with that split and ∅ ⊊ X_{u,v} ⊊ X.
  std::map<Split, std::uint64_t> x_splits;
  /// E_{u,v}|X-E_{u,v} -> number of unordered pairs with that split and ∅ ⊊ E_{u,v} ⊊ X.
  std::map<Split, std::uint64_t> e_splits;

  /// The midpath split system S_D (keys of x_splits).
  SplitSystem midpath_splits() const;
};

/// Throws std::logic_error if |S_D| exceeds n(n-1), which cannot happen for a valid matrix.
MidpathDecomposition midpath_split_system(const DistanceMatrix& d);

/// Process-wide tally of midpath_split_system calls, for bound auditing.
struct MidpathBoundStats {
  std::uint64_t matrices = 0;
  std::uint64_t tight = 0;  ///< calls where |S_D| = n(n-1)
  std::uint64_t largest_ratio_num = 0, largest_ratio_den = 1;  ///< max |S_D| / n(n-1)
};
MidpathBoundStats midpath_bound_stats();

/// O = sum over x_splits of (p/2)·count·D_S + sum over e_splits of (q - p/2)·count·D_S.
DistanceMatrix order_distance_eq1(const DistanceMatrix& d, const OrderParams& params);

/// O(x,y) = p · K^{q/p}(R_x, R_y) with the O(n log n) Kendall path per pair.
DistanceMatrix order_distance_kendall(const DistanceMatrix& d, const OrderParams& params);

/// Closed-form order distance (p = 2, q = 1) of two incompatible splits with weight 2 each,
/// whose four intersections have n1 = |A1∩A2|, n2 = |B1∩A2|, n3 = |A1∩B2|, n4 = |B1∩B2|
/// elements. Values are for representatives x1..x4 of the four blocks.
struct TwoSplitOrderValues {
  Rational o12, o13, o14, o23, o24, o34;
};
TwoSplitOrderValues two_split_order_values(unsigned n1, unsigned n2, unsigned n3, unsigned n4);

/// The weighted instance behind two_split_order_values: elements numbered block by block
/// (n1 elements of A1∩A2 first, then B1∩A2, A1∩B2, B1∩B2), A1|B1 and A2|B2 with weight 2.
struct TwoSplitInstance {
  WeightedSplitSystem system;
  Split first;
  Split second;
  /// Block (0..3) of each element.
  std::vector<int> block;
};
TwoSplitInstance two_split_instance(unsigned n1, unsigned n2, unsigned n3, unsigned n4);

/// Runs `trials` random {1,2}-valued matrices on n points and counts how many reach
/// |S_D| = n(n-1). Exploratory only.
std::size_t count_tight_midpath(std::size_t n, std::size_t trials, std::uint64_t seed);

}  // namespace ordist
