#include "ordist/generators.hpp"

#include <numeric>
#include <stdexcept>

namespace ordist {

DistanceMatrix random_one_two_matrix(std::size_t n, Rng& rng) {
  return random_positive_matrix(n, 2, rng);
}

DistanceMatrix random_positive_matrix(std::size_t n, std::uint64_t max_value, Rng& rng) {
  if (max_value < 1) throw std::invalid_argument("max_value must be positive");
  return DistanceMatrix::from_pairs(GroundSet::numbered(n), [&](Element, Element) {
    return Rational(static_cast<unsigned long>(rng.uniform(1, max_value)));
  });
}

std::vector<Element> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  rng.shuffle(p.begin(), p.end());
  return p;
}

WeightedSplitSystem random_binary_tree(const GroundSet& ground, std::uint64_t max_weight,
                                       Rng& rng) {
  const std::size_t n = ground.size();
  if (n < 3) throw std::invalid_argument("binary trees need at least three leaves");
  // Vertices 0..n-1 are leaves; internal vertices follow. Edges as endpoint pairs.
  std::vector<std::pair<std::size_t, std::size_t>> edges{{0, n}, {1, n}, {2, n}};
  std::size_t next_vertex = n + 1;
  for (std::size_t leaf = 3; leaf < n; ++leaf) {
    const auto pick = rng.uniform(0, edges.size() - 1);
    const auto [a, b] = edges[pick];
    const std::size_t mid = next_vertex++;
    edges[pick] = {a, mid};
    edges.emplace_back(mid, b);
    edges.emplace_back(mid, leaf);
  }
  std::vector<std::vector<std::size_t>> adjacency(next_vertex);
  for (const auto& [a, b] : edges) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  WeightedSplitSystem out(ground);
  for (const auto& [a, b] : edges) {
    // Leaves reachable from b without crossing the edge.
    ElementSet side(n);
    std::vector<std::size_t> stack{b};
    std::vector<bool> seen(next_vertex, false);
    seen[a] = seen[b] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      if (v < n) side.set(v);
      for (auto w : adjacency[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.add(Split(side), Rational(static_cast<unsigned long>(rng.uniform(1, max_weight))));
  }
  return out;
}

RandomCircular random_maximum_circular(const GroundSet& ground, std::uint64_t min_weight,
                                       std::uint64_t max_weight, Rng& rng) {
  const std::size_t n = ground.size();
  CircularOrdering ordering(random_permutation(n, rng));
  WeightedSplitSystem system(ground);
  for (const auto& interval : all_intervals(n)) {
    system.add(interval_split(ordering, interval),
               Rational(static_cast<unsigned long>(rng.uniform(min_weight, max_weight))));
  }
  return {std::move(ordering), std::move(system)};
}

}  // namespace ordist
