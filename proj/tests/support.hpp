#pragma once

#include "ordist/distance_matrix.hpp"
#include "ordist/fixtures.hpp"
#include "ordist/generators.hpp"
#include "ordist/rankings.hpp"
#include "ordist/split_system.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace testing {

using namespace ordist;

inline Split sp(const GroundSet& g, std::string_view side) { return fixtures::split_of(g, side); }

inline Rational r(long num, long den = 1) {
  Rational v(num, den);
  v.canonicalize();
  return v;
}

// Order distance straight from the set definitions, one ordered pair at a time.
inline DistanceMatrix literal_order_distance(const DistanceMatrix& d, const Rational& p,
                                             const Rational& q) {
  const std::size_t n = d.size();
  std::vector<Rational> o(n * n);
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) {
      if (u == v) continue;
      std::vector<bool> closer(n), equal(n);
      std::size_t nc = 0, ne = 0;
      for (Element x = 0; x < n; ++x) {
        closer[x] = d(u, x) < d(v, x);
        equal[x] = d(u, x) == d(v, x);
        nc += closer[x];
        ne += equal[x];
      }
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          if (nc > 0 && nc < n && closer[x] != closer[y]) o[x * n + y] += p / 2;
          if (u < v && ne > 0 && ne < n && equal[x] != equal[y]) o[x * n + y] += q - p / 2;
        }
    }
  return DistanceMatrix(d.ground(), std::move(o));
}

// Per-pair summation, independent of generate_distance.
inline DistanceMatrix summed(const WeightedSplitSystem& ws) {
  const std::size_t n = ws.ground().size();
  std::vector<Rational> e(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (const auto& [s, w] : ws.weights())
        if (s.side().test(x) != s.side().test(y)) e[x * n + y] += w;
  return DistanceMatrix(ws.ground(), std::move(e));
}

// Entries uniform in [1, max]; small max gives many ties.
inline DistanceMatrix random_matrix(std::size_t n, std::uint64_t max, Rng& rng) {
  return random_positive_matrix(n, max, rng);
}

inline PartialRanking random_ranking(const GroundSet& g, Rng& rng) {
  const std::size_t n = g.size();
  const std::size_t blocks = rng.uniform(1, n);
  std::vector<std::vector<Element>> out(blocks);
  auto perm = random_permutation(n, rng);
  for (std::size_t i = 0; i < n; ++i) out[i < blocks ? i : rng.uniform(0, blocks - 1)].push_back(perm[i]);
  return PartialRanking(g, std::move(out));
}

inline Rational random_rational(Rng& rng, long max_num, long max_den) {
  return r(static_cast<long>(rng.uniform(0, max_num)), static_cast<long>(rng.uniform(1, max_den)));
}

// Random (p, q) with p > 0 and q >= p/2.
inline OrderParams random_params(Rng& rng) {
  Rational p = r(static_cast<long>(rng.uniform(1, 8)), static_cast<long>(rng.uniform(1, 4)));
  Rational q = p / 2 + random_rational(rng, 6, 3);
  return OrderParams(p, q);
}

inline std::vector<std::vector<Element>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<Element>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<Element> s;
    for (Element i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace testing

#include "ordist/flatlab.hpp"

namespace testing {

// Greedy random basis: shuffled splits, kept when the rank grows.
inline SplitSystem random_maximum_independent(const GroundSet& g, Rng& rng) {
  const auto all = all_splits(g);
  std::vector<Split> order(all.begin(), all.end());
  rng.shuffle(order.begin(), order.end());
  SplitSystem out(g);
  const std::size_t target = g.size() * (g.size() - 1) / 2;
  for (const auto& s : order) {
    if (out.size() == target) break;
    auto trial = out;
    trial.insert(s);
    if (split_rank(trial) == trial.size()) out = std::move(trial);
  }
  return out;
}

}  // namespace testing
