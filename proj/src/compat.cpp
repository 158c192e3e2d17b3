#include "ordist/compat.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordist {

bool is_compatible_pair(const Split& s1, const Split& s2) {
  if (s1.ground_size() != s2.ground_size())
    throw std::invalid_argument("splits over different ground sets");
  const ElementSet& a1 = s1.side();
  const ElementSet& a2 = s2.side();
  // Both canonical sides avoid element 0, so B1 ∩ B2 is never empty.
  return !a1.intersects(a2) || a1.is_subset_of(a2) || a2.is_subset_of(a1);
}

std::optional<std::pair<Split, Split>> first_incompatible_pair(const SplitSystem& system) {
  for (auto i = system.begin(); i != system.end(); ++i)
    for (auto j = std::next(i); j != system.end(); ++j)
      if (!is_compatible_pair(*i, *j)) return std::pair{*i, *j};
  return std::nullopt;
}

bool is_compatible(const SplitSystem& system) { return !first_incompatible_pair(system); }

XTree::XTree(GroundSet ground, std::size_t vertex_count, std::vector<XTreeEdge> edges,
             std::vector<std::size_t> leaf_map)
    : ground_(std::move(ground)),
      vertex_count_(vertex_count),
      edges_(std::move(edges)),
      leaf_map_(std::move(leaf_map)) {
  if (leaf_map_.size() != ground_.size()) throw std::invalid_argument("leaf map size mismatch");
  if (edges_.size() + 1 != vertex_count_) throw std::invalid_argument("a tree has |V|-1 edges");
  std::vector<bool> labelled(vertex_count_, false);
  for (auto v : leaf_map_) {
    if (v >= vertex_count_) throw std::invalid_argument("leaf map out of range");
    labelled[v] = true;
  }
  const auto deg = degrees();
  for (std::size_t v = 0; v < vertex_count_; ++v)
    if (deg[v] <= 2 && !labelled[v])
      throw std::invalid_argument("unlabelled vertex of degree at most two");
  for (const auto& e : edges_)
    if (e.weight < 0) throw std::invalid_argument("negative edge weight");
}

std::vector<std::size_t> XTree::degrees() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const auto& e : edges_) {
    ++deg.at(e.a);
    ++deg.at(e.b);
  }
  return deg;
}

namespace {

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_of(
    std::size_t vertex_count, const std::vector<XTreeEdge>& edges) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(vertex_count);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].a].push_back({edges[i].b, i});
    adj[edges[i].b].push_back({edges[i].a, i});
  }
  return adj;
}

// Elements whose vertices are reachable from `from` without using edge `skip`.
ElementSet reachable_elements(
    const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& adj,
    const std::vector<std::vector<Element>>& labels, std::size_t from, std::size_t skip,
    std::size_t n) {
  ElementSet out(n);
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (Element x : labels[v]) out.set(x);
    for (const auto& [w, e] : adj[v]) {
      if (e == skip || seen[w]) continue;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  return out;
}

}  // namespace

WeightedSplitSystem XTree::edge_splits() const {
  const std::size_t n = ground_.size();
  std::vector<std::vector<Element>> labels(vertex_count_);
  for (Element x = 0; x < n; ++x) labels[leaf_map_[x]].push_back(x);
  const auto adj = adjacency_of(vertex_count_, edges_);
  WeightedSplitSystem out(ground_);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    out.add(Split(reachable_elements(adj, labels, edges_[i].b, i, n)), edges_[i].weight);
  return out;
}

XTree xtree_from_compatible(const WeightedSplitSystem& ws) {
  const std::size_t n = ws.ground().size();
  if (!is_compatible(ws.splits())) throw std::invalid_argument("split system is not compatible");

  // Larger smaller-part first; ties in split order.
  std::vector<std::pair<Split, Rational>> order(ws.weights().begin(), ws.weights().end());
  std::stable_sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
    return l.first.min_part_size() > r.first.min_part_size();
  });

  std::size_t vertex_count = 1;
  std::vector<XTreeEdge> edges;
  std::vector<std::size_t> leaf_map(n, 0);

  for (const auto& [split, weight] : order) {
    std::vector<std::vector<Element>> labels(vertex_count);
    for (Element x = 0; x < n; ++x) labels[leaf_map[x]].push_back(x);
    const auto adj = adjacency_of(vertex_count, edges);
    const ElementSet& side = split.side();

    // The vertex whose labels and branches each lie within one part of the split.
    std::optional<std::size_t> host;
    std::vector<std::size_t> moving_edges;
    for (std::size_t v = 0; v < vertex_count && !host; ++v) {
      bool ok = true;
      std::vector<std::size_t> inside_edges;
      for (const auto& [w, e] : adj[v]) {
        const ElementSet branch = reachable_elements(adj, labels, w, e, n);
        if (branch.is_subset_of(side)) {
          inside_edges.push_back(e);
        } else if (branch.intersects(side)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        host = v;
        moving_edges = std::move(inside_edges);
      }
    }
    if (!host) throw std::logic_error("no vertex can host a compatible split");

    const std::size_t fresh = vertex_count++;
    for (Element x = 0; x < n; ++x)
      if (leaf_map[x] == *host && side.test(x)) leaf_map[x] = fresh;
    for (auto e : moving_edges) {
      if (edges[e].a == *host) {
        edges[e].a = fresh;
      } else {
        edges[e].b = fresh;
      }
    }
    edges.push_back({*host, fresh, weight});
  }
  return XTree(ws.ground(), vertex_count, std::move(edges), std::move(leaf_map));
}

std::optional<std::array<Element, 4>> four_point_check(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      for (Element c = b + 1; c < n; ++c)
        for (Element e = c + 1; e < n; ++e) {
          const Rational s1 = d(a, b) + d(c, e);
          const Rational s2 = d(a, c) + d(b, e);
          const Rational s3 = d(a, e) + d(b, c);
          if ((s1 > s2 && s1 > s3) || (s2 > s1 && s2 > s3) || (s3 > s1 && s3 > s2))
            return std::array<Element, 4>{a, b, c, e};
        }
  return std::nullopt;
}

bool is_ultrametric(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (d(x, z) > std::max(d(x, y), d(y, z))) return false;
  return true;
}

namespace {

// 0 if no condition holds, else 10*condition + branch.
int six_point_code(const DistanceMatrix& d, Element a, Element b, Element s, Element t, Element x,
                   Element y) {
  if (!(d(x, a) < d(y, a) && d(y, b) <= d(x, b))) return 0;
  if (d(a, s) < d(a, t) && d(b, s) < d(b, t) && d(x, t) <= d(x, s) && d(y, t) <= d(y, s))
    return 11;
  if (d(a, s) <= d(a, t) && d(b, s) <= d(b, t) && d(x, t) < d(x, s) && d(y, t) < d(y, s))
    return 12;
  if (d(b, s) < d(b, t) && d(a, t) <= d(a, s) && d(x, s) < d(x, t) && d(y, t) <= d(y, s))
    return 21;
  if (d(b, s) <= d(b, t) && d(a, t) < d(a, s) && d(x, s) <= d(x, t) && d(y, t) < d(y, s))
    return 22;
  return 0;
}

}  // namespace

std::optional<SixPointWitness> six_point_witness(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (a == b) continue;
      for (Element s = 0; s < n; ++s)
        for (Element t = 0; t < n; ++t) {
          if (s == t) continue;
          for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y) {
              if (x == y) continue;
              if (int code = six_point_code(d, a, b, s, t, x, y))
                return SixPointWitness{a, b, s, t, x, y, code / 10, code % 10};
            }
        }
    }
  return std::nullopt;
}

bool witness_holds(const DistanceMatrix& d, const SixPointWitness& w) {
  if (w.a == w.b || w.s == w.t || w.x == w.y) return false;
  // The branches are tried in order, so re-evaluation reports the first that holds.
  const int code = six_point_code(d, w.a, w.b, w.s, w.t, w.x, w.y);
  return code == 10 * w.condition + w.branch;
}

}  // namespace ordist
