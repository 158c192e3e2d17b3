#pragma once

#include "ordist/distance_matrix.hpp"
#include "ordist/split_system.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace ordist {

/// A circular ordering x_1..x_n of the ground set. Equality is up to rotation and reversal.
class CircularOrdering {
 public:
  /// Throws std::invalid_argument unless `sequence` is a permutation of 0..n-1.
  explicit CircularOrdering(std::vector<Element> sequence);

  std::size_t size() const { return sequence_.size(); }
  const std::vector<Element>& sequence() const { return sequence_; }
  Element operator[](std::size_t position) const { return sequence_[position]; }
  std::size_t position_of(Element e) const { return position_.at(e); }

  /// Rotated to start at element 0, direction chosen so the second element is the smaller
  /// of element 0's two neighbours.
  CircularOrdering canonical() const;

  bool operator==(const CircularOrdering& other) const {
    return canonical().sequence_ == other.canonical().sequence_;
  }

 private:
  std::vector<Element> sequence_;
  std::vector<std::size_t> position_;
};

/// The arc of positions first..last (0-based, first <= last <= n-2) of an ordering; the arc
/// never contains the last position, so each interval split has exactly one representation.
struct IntervalSplit {
  std::size_t first;
  std::size_t last;
  auto operator<=>(const IntervalSplit&) const = default;
};

/// All C(n,2) intervals of an n-element ordering.
std::vector<IntervalSplit> all_intervals(std::size_t n);
Split interval_split(const CircularOrdering& theta, const IntervalSplit& interval);

/// Elements at positions i < j < k < l of theta violating the Kalmanson inequality.
using Quadruple = std::array<Element, 4>;

/// First violating quadruple (lexicographic in positions) or nullopt if the Kalmanson
/// inequality holds for all i < j < k < l. Accepts in O(n^2) when the interval weights are
/// all non-negative, since that decomposition implies every inequality.
std::optional<Quadruple> kalmanson_check(const DistanceMatrix& d, const CircularOrdering& theta);
/// Plain O(n^4) scan over all position quadruples.
std::optional<Quadruple> kalmanson_check_naive(const DistanceMatrix& d,
                                               const CircularOrdering& theta);

/// The unique weights w with D = sum over intervals of w(I)·D_I (any D, signs unrestricted).
std::map<IntervalSplit, Rational> circular_weights(const DistanceMatrix& d,
                                                   const CircularOrdering& theta);
/// True iff all interval weights are >= 0, i.e. D is generated by a weighted circular split
/// system fitting theta.
bool is_circular_on(const DistanceMatrix& d, const CircularOrdering& theta);

/// True iff each split has a part that is an arc of theta.
bool fits_on_ordering(const SplitSystem& system, const CircularOrdering& theta);

/// An ordering on which D is circular, or nullopt if D is not a circular distance.
/// Depth-first insertion of elements into a growing cycle, pruned by the interval weights
/// touching the inserted element; the result is re-verified from scratch.
std::optional<CircularOrdering> recover_circular_ordering(const DistanceMatrix& d);
/// Tries all (n-1)!/2 orderings against the Kalmanson inequality and the triangle inequality.
/// Meant as a test oracle; n <= 9.
std::optional<CircularOrdering> recover_circular_ordering_exhaustive(const DistanceMatrix& d);

/// An ordering that every split fits on, or nullopt. Throws on an empty system.
std::optional<CircularOrdering> is_circular_split_system(const SplitSystem& system);
/// Brute force over all orderings; n <= 9.
std::optional<CircularOrdering> is_circular_split_system_exhaustive(const SplitSystem& system);

/// D(x,y) = total weight of intervals separating x and y, via 2D prefix sums in O(n^2).
DistanceMatrix evaluate_circular_distance(const GroundSet& ground, const CircularOrdering& theta,
                                          const std::map<IntervalSplit, Rational>& weights);

struct CircularEngineOptions {
  /// Re-scan every X_{u,v} in full and use the scan whenever it disagrees with the binary
  /// search. Off by default: once theta is verified the arcs are guaranteed.
  bool confirm_arcs = false;
};

/// O_{p,p/2}(D) for a circular D: recover theta, locate each X_{u,v} as an arc of theta by
/// binary search, accumulate p/2 per ordered pair on interval splits, then evaluate.
/// Throws std::invalid_argument if D is not circular.
DistanceMatrix order_distance_circular(const DistanceMatrix& d, const Rational& p,
                                       const CircularEngineOptions& options = {});

}  // namespace ordist
