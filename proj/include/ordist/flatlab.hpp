#pragma once

#include "ordist/distance_matrix.hpp"
#include "ordist/split_system.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace ordist {

/// Rank of the split metrics of `system` as vectors over the C(n,2) element pairs.
/// Fraction-free (Bareiss) elimination over big integers.
std::size_t split_rank(const SplitSystem& system);
bool is_linearly_independent(const SplitSystem& system);

/// The unique w with target = sum w(S)·D_S over `basis`, or nullopt if target lies outside
/// the span. Weights may be negative; callers inspect signs. Throws std::invalid_argument if
/// `basis` is linearly dependent.
std::optional<std::map<Split, Rational>> express_in_basis(const DistanceMatrix& target,
                                                          const SplitSystem& basis);

/// First incompatible pair (in system order) for which none of the closedness conditions
/// (a)-(d) holds, or nullopt if the system is closed. Requires n >= 4.
std::optional<std::pair<Split, Split>> is_closed(const SplitSystem& system);

/// First element pair {x,y} without a separating pattern A ∪ {x,y}|B, A ∪ {x}|B ∪ {y},
/// A ∪ {y}|B ∪ {x}, A|B ∪ {x,y} inside the system (those that are genuine splits), or nullopt.
/// Candidate (A,B) are the partitions of X - {x,y} induced by the system's own splits.
std::optional<std::pair<Element, Element>> pairwise_separation_check(const SplitSystem& system);
/// Same, trying all 2^(n-2) partitions of X - {x,y}; n <= 20.
std::optional<std::pair<Element, Element>> pairwise_separation_check_exhaustive(
    const SplitSystem& system);

/// C(n,2) splits, independent, and every 4-element restriction has exactly 6 splits.
bool maximum_flat_by_restriction(const SplitSystem& system);
/// C(n,2) splits, independent, and the pairwise separation property.
bool maximum_flat_by_separation(const SplitSystem& system);
/// Both routes; throws std::logic_error if they disagree.
bool is_maximum_flat(const SplitSystem& system);

/// An ordering pi of X and 1-based adjacent-swap positions kappa of length C(n,2).
struct AllowablePair {
  std::vector<Element> pi;
  std::vector<std::size_t> kappa;
};

/// Throws std::invalid_argument unless every element pair swaps exactly once.
void validate_allowable(const AllowablePair& pair);
/// {S(pi_{i-1}, k_i)}: the prefix split taken just before each swap.
SplitSystem allowable_splits(const GroundSet& ground, const AllowablePair& pair);

class Rng;
/// Random pi, then repeatedly swaps a uniformly chosen adjacent pair that has not yet
/// swapped, until the ordering is reversed.
AllowablePair random_allowable_pair(std::size_t n, Rng& rng);

/// A weighting whose order distance (p = 2, q = 1) is not a non-negative combination of the
/// system's splits.
struct CounterexampleFound {
  enum class Reason { NotInSpan, NegativeWeight };
  WeightedSplitSystem weighting;
  Reason reason;
  /// 1 = the two-split weighting of an incompatible pair, 2 = random trial.
  int phase;
  std::size_t trial = 0;
  std::optional<std::pair<Split, Split>> pair;
  /// For NegativeWeight, the first split with a negative coefficient.
  std::optional<Split> negative_split;
  std::optional<std::map<Split, Rational>> coefficients;
};

struct NoCounterexampleFound {
  std::size_t trials;
};

using OrderlyVerdict = std::variant<CounterexampleFound, NoCounterexampleFound>;

/// Result of testing one weighting: nullopt if its order distance decomposes non-negatively.
std::optional<CounterexampleFound> check_weighting(const SplitSystem& system,
                                                   const WeightedSplitSystem& weighting);

/// Refutation search for orderliness of a linearly independent system. Phase 1 tries weight 2
/// on each incompatible pair; phase 2 draws `trials` weightings with entries in [0, 20], trial
/// t seeded with seed + t. Throws std::invalid_argument for dependent systems.
OrderlyVerdict orderly_test(const SplitSystem& system, std::size_t trials, std::uint64_t seed);

}  // namespace ordist
