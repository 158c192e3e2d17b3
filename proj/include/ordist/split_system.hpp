#pragma once

#include "ordist/distance_matrix.hpp"
#include "ordist/rational.hpp"
#include "ordist/split.hpp"

#include <map>
#include <set>
#include <span>

namespace ordist {

/// A set of splits of one ground set.
class SplitSystem {
 public:
  explicit SplitSystem(GroundSet ground) : ground_(std::move(ground)) {}
  SplitSystem(GroundSet ground, std::set<Split> splits);

  const GroundSet& ground() const { return ground_; }
  const std::set<Split>& splits() const { return splits_; }
  std::size_t size() const { return splits_.size(); }
  bool empty() const { return splits_.empty(); }
  bool contains(const Split& s) const { return splits_.contains(s); }
  /// Returns false if the split was already present.
  bool insert(const Split& s);

  auto begin() const { return splits_.begin(); }
  auto end() const { return splits_.end(); }

  bool operator==(const SplitSystem&) const = default;

 private:
  GroundSet ground_;
  std::set<Split> splits_;
};

/// Splits with non-negative rational weights, (S, w).
class WeightedSplitSystem {
 public:
  explicit WeightedSplitSystem(GroundSet ground) : ground_(std::move(ground)) {}
  /// Throws std::invalid_argument on a negative weight or a split over the wrong ground set.
  WeightedSplitSystem(GroundSet ground, std::map<Split, Rational> weights);
  /// Every split of `system` with the same weight.
  static WeightedSplitSystem uniform(const SplitSystem& system, const Rational& weight);

  const GroundSet& ground() const { return ground_; }
  const std::map<Split, Rational>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  /// Weight of `s`, zero if absent.
  Rational weight(const Split& s) const;
  /// Adds `w` (>= 0) to the weight of `s`.
  void add(const Split& s, const Rational& w);

  SplitSystem support() const;
  /// All splits of the system, including zero-weight ones.
  SplitSystem splits() const;

  bool operator==(const WeightedSplitSystem&) const = default;

 private:
  GroundSet ground_;
  std::map<Split, Rational> weights_;
};

/// Parameters of the order distance; requires p > 0 and q >= p/2.
class OrderParams {
 public:
  OrderParams(Rational p, Rational q);
  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  /// Kendall penalty q/p.
  Rational penalty() const { return q_ / p_; }

 private:
  Rational p_;
  Rational q_;
};

/// 1 if `s` separates x and y, else 0.
Rational split_metric(const Split& s, Element x, Element y);

/// D(x,y) = sum of w(S) over the splits S separating x and y.
DistanceMatrix generate_distance(const WeightedSplitSystem& ws);

/// {A ∩ Y | B ∩ Y}, dropping pairs with an empty part. The result lives on the ground set
/// `Y` with elements re-indexed in the order listed.
SplitSystem restrict_split_system(const SplitSystem& system, std::span<const Element> subset);

/// Every bipartition of an n-set (2^(n-1) - 1 splits).
SplitSystem all_splits(const GroundSet& ground);

}  // namespace ordist
