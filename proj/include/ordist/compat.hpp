#pragma once

#include "ordist/distance_matrix.hpp"
#include "ordist/split_system.hpp"

#include <array>
#include <optional>
#include <vector>

namespace ordist {

bool is_compatible_pair(const Split& s1, const Split& s2);
/// True iff every two splits are compatible (vacuously for fewer than two).
bool is_compatible(const SplitSystem& system);
/// First incompatible pair in system order, if any.
std::optional<std::pair<Split, Split>> first_incompatible_pair(const SplitSystem& system);

struct XTreeEdge {
  std::size_t a;
  std::size_t b;
  Rational weight;
};

/// An edge-weighted tree with a labelling map X -> vertices whose image contains every vertex
/// of degree at most two.
class XTree {
 public:
  XTree(GroundSet ground, std::size_t vertex_count, std::vector<XTreeEdge> edges,
        std::vector<std::size_t> leaf_map);

  const GroundSet& ground() const { return ground_; }
  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<XTreeEdge>& edges() const { return edges_; }
  /// Vertex carrying each element.
  const std::vector<std::size_t>& leaf_map() const { return leaf_map_; }
  std::vector<std::size_t> degrees() const;

  /// The split of X obtained by deleting each edge, weighted by that edge.
  WeightedSplitSystem edge_splits() const;

 private:
  GroundSet ground_;
  std::size_t vertex_count_;
  std::vector<XTreeEdge> edges_;
  std::vector<std::size_t> leaf_map_;
};

/// The unique X-tree whose edges realise the splits. Throws std::invalid_argument if the
/// system is not compatible.
XTree xtree_from_compatible(const WeightedSplitSystem& ws);

/// First 4-subset {a<b<c<d} where the largest of the three pair sums is unique (so the
/// tree-like 4-point condition fails), or nullopt. Always nullopt for n < 4.
std::optional<std::array<Element, 4>> four_point_check(const DistanceMatrix& d);

bool is_ultrametric(const DistanceMatrix& d);

/// Six elements certifying that the midpath split system is incompatible.
struct SixPointWitness {
  Element a, b, s, t, x, y;
  int condition;  ///< 1 or 2
  int branch;     ///< which of the two disjuncts holds, 1 or 2
};

/// Exhaustive O(n^6) search for the lexicographically first (a,b,s,t,x,y) with a != b,
/// s != t, x != y satisfying one of the two six-point conditions.
std::optional<SixPointWitness> six_point_witness(const DistanceMatrix& d);
/// Re-evaluates the recorded inequalities for `w` in `d`.
bool witness_holds(const DistanceMatrix& d, const SixPointWitness& w);

}  // namespace ordist
