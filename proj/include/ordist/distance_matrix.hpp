#pragma once

#include "ordist/ground_set.hpp"
#include "ordist/rational.hpp"

#include <functional>
#include <span>
#include <vector>

namespace ordist {

/// Symmetric, zero-diagonal, non-negative matrix of exact rationals over a ground set.
/// Invariants are validated on construction; instances are immutable afterwards.
class DistanceMatrix {
 public:
  /// Row-major n*n entries. Throws std::invalid_argument if any invariant fails.
  DistanceMatrix(GroundSet ground, std::vector<Rational> entries);

  static DistanceMatrix zero(GroundSet ground);
  /// Builds from f(i, j), evaluated once per unordered pair i < j.
  static DistanceMatrix from_pairs(GroundSet ground,
                                   const std::function<Rational(Element, Element)>& f);

  std::size_t size() const { return ground_.size(); }
  const GroundSet& ground() const { return ground_; }
  const Rational& operator()(Element i, Element j) const { return entries_[i * size() + j]; }
  const Rational& at(Element i, Element j) const;
  std::span<const Rational> row(Element i) const {
    return {entries_.data() + i * size(), size()};
  }
  const std::vector<Rational>& entries() const { return entries_; }

  /// Restriction to the listed elements (re-indexed in the order given).
  DistanceMatrix restrict_to(std::span<const Element> elements) const;

  bool is_zero() const;
  bool satisfies_triangle_inequality() const;

  bool operator==(const DistanceMatrix& other) const {
    return ground_ == other.ground_ && entries_ == other.entries_;
  }

 private:
  GroundSet ground_;
  std::vector<Rational> entries_;
};

DistanceMatrix operator+(const DistanceMatrix& a, const DistanceMatrix& b);
DistanceMatrix operator*(const Rational& c, const DistanceMatrix& d);

}  // namespace ordist
