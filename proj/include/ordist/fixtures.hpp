#pragma once

#include "ordist/distance_matrix.hpp"
#include "ordist/split_system.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ordist::fixtures {

/// Split of `ground` whose listed side is given as comma-separated labels, e.g. "a,b".
Split split_of(const GroundSet& ground, std::string_view side);

/// Non-maximum compatible system on {a..e}: b, e weight 2; a weight 4; c, d, {c,d} weight 1.
WeightedSplitSystem ultrametric5();

/// {b}|{a,c,d}, {a,b}|{c,d}, {a,d}|{b,c} with unit weights.
WeightedSplitSystem circular4();
/// circular4's splits plus {a}|rest and {c}|rest, weighted as the decomposition of the order
/// distance O_{2,1} of circular4: ab|cd = ad|bc = 3, a = c = 1, b = 4.
WeightedSplitSystem circular4_superset();

/// Six-point matrix on {a,b,s,t,x,y} whose midpath system is incompatible while every
/// five-point restriction has a compatible one.
DistanceMatrix six_point();

/// Binary tree on {a..e}: all trivial splits, ab|cde and abc|de.
SplitSystem tree5();

/// The two maximum flat, non-circular split systems on {a..e}.
SplitSystem s1_5();
SplitSystem s2_5();

/// All C(n,2) intervals of the ordering a, b, c, ... (n letters).
SplitSystem max_circular(std::size_t n);

/// Names accepted by split_fixture: S1_5, S2_5, tree5, circular4, circular4_superset,
/// ultrametric5, max_circular5.
std::optional<WeightedSplitSystem> split_fixture(std::string_view name);
/// Names accepted by matrix_fixture: six_point, ultrametric5, circular4.
std::optional<DistanceMatrix> matrix_fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace ordist::fixtures
