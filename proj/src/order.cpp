#include "ordist/order.hpp"

#include "ordist/generators.hpp"
#include "ordist/parallel.hpp"
#include "ordist/rankings.hpp"
#include "ordist/scaled_matrix.hpp"

#include <mutex>
#include <optional>
#include <stdexcept>

namespace ordist {

PairPartition pair_partition(const DistanceMatrix& d, Element u, Element v) {
  const std::size_t n = d.size();
  if (u >= n || v >= n) throw std::out_of_range("element index out of range");
  if (u == v) throw std::invalid_argument("pair_partition needs u != v");
  PairPartition out{u, v, ElementSet(n), ElementSet(n), ElementSet(n)};
  for (Element x = 0; x < n; ++x) {
    const int c = cmp(d(u, x), d(v, x));
    if (c < 0) {
      out.closer_to_u.set(x);
    } else if (c > 0) {
      out.closer_to_v.set(x);
    } else {
      out.equidistant.set(x);
    }
  }
  return out;
}

SplitSystem MidpathDecomposition::midpath_splits() const {
  SplitSystem out(ground);
  for (const auto& [s, count] : x_splits) out.insert(s);
  return out;
}

namespace {

bool proper(const ElementSet& s) { return s.any() && !s.all(); }

std::mutex stats_mutex;
MidpathBoundStats stats;

void record(std::size_t size, std::size_t bound) {
  std::lock_guard lock(stats_mutex);
  ++stats.matrices;
  if (size == bound) ++stats.tight;
  if (size * stats.largest_ratio_den > stats.largest_ratio_num * bound) {
    stats.largest_ratio_num = size;
    stats.largest_ratio_den = bound;
  }
}

}  // namespace

MidpathDecomposition midpath_split_system(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  MidpathDecomposition out{d.ground(), {}, {}};
  if (n < 2) return out;
  const ScaledMatrix scaled(d);

  // One slot per ordered pair (u, v); slot u*n+v with u < v also carries E_{u,v}.
  std::vector<std::optional<Split>> x_slots(n * n), e_slots(n * n);
  parallel_for(n, [&](std::size_t u) {
    ElementSet closer(n), equal(n);
    for (Element v = 0; v < n; ++v) {
      if (v == u) continue;
      closer.reset();
      equal.reset();
      for (Element x = 0; x < n; ++x) {
        const int c = scaled.compare(u, x, v, x);
        if (c < 0) closer.set(x);
        if (c == 0) equal.set(x);
      }
      if (proper(closer)) x_slots[u * n + v].emplace(closer);
      if (u < v && proper(equal)) e_slots[u * n + v].emplace(equal);
    }
  });
  for (const auto& s : x_slots)
    if (s) ++out.x_splits[*s];
  for (const auto& s : e_slots)
    if (s) ++out.e_splits[*s];

  record(out.x_splits.size(), n * (n - 1));
  if (out.x_splits.size() > n * (n - 1))
    throw std::logic_error("midpath split system exceeds n(n-1) splits");
  return out;
}

MidpathBoundStats midpath_bound_stats() {
  std::lock_guard lock(stats_mutex);
  return stats;
}

namespace {

// counts[x*n+y] += c for every pair separated by a split with multiplicity c.
void accumulate(const std::map<Split, std::uint64_t>& splits, std::size_t n,
                std::vector<std::uint64_t>& counts) {
  for (const auto& [s, c] : splits) {
    const auto inside = elements_of(s.side());
    const auto outside = elements_of(s.other_side());
    for (Element x : inside) {
      for (Element y : outside) {
        counts[x * n + y] += c;
        counts[y * n + x] += c;
      }
    }
  }
}

Rational from_count(std::uint64_t c) { return Rational(static_cast<unsigned long>(c)); }

}  // namespace

DistanceMatrix order_distance_eq1(const DistanceMatrix& d, const OrderParams& params) {
  const std::size_t n = d.size();
  const auto decomposition = midpath_split_system(d);
  std::vector<std::uint64_t> x_counts(n * n, 0), e_counts(n * n, 0);
  accumulate(decomposition.x_splits, n, x_counts);
  accumulate(decomposition.e_splits, n, e_counts);

  const Rational half_p = params.p() / 2;
  const Rational tie_weight = params.q() - half_p;
  std::vector<Rational> entries(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    if (x_counts[k] != 0) entries[k] += half_p * from_count(x_counts[k]);
    if (e_counts[k] != 0) entries[k] += tie_weight * from_count(e_counts[k]);
  }
  return DistanceMatrix(d.ground(), std::move(entries));
}

DistanceMatrix order_distance_kendall(const DistanceMatrix& d, const OrderParams& params) {
  const std::size_t n = d.size();
  std::vector<PartialRanking> rankings;
  rankings.reserve(n);
  for (Element x = 0; x < n; ++x) rankings.push_back(ranking_from_distance(d, x));

  const Rational penalty = params.penalty();
  std::vector<Rational> entries(n * n);
  parallel_for(n, [&](std::size_t x) {
    for (Element y = x + 1; y < n; ++y)
      entries[x * n + y] = params.p() * kendall_penalized(rankings[x], rankings[y], penalty);
  });
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) entries[y * n + x] = entries[x * n + y];
  return DistanceMatrix(d.ground(), std::move(entries));
}

TwoSplitOrderValues two_split_order_values(unsigned n1, unsigned n2, unsigned n3, unsigned n4) {
  if (n1 == 0 || n2 == 0 || n3 == 0 || n4 == 0)
    throw std::invalid_argument("block sizes must be positive");
  const Rational a(n1), b(n2), c(n3), e(n4);
  TwoSplitOrderValues v;
  v.o12 = a * e + 2 * (a * b + c * e) + b * c;
  v.o13 = a * e + 2 * (a * c + b * e) + b * c;
  v.o14 = 2 * (a * e + a * b + c * e + a * c + b * e);
  v.o23 = 2 * (b * c + a * b + c * e + a * c + b * e);
  v.o24 = a * e + 2 * (a * c + b * e) + b * c;
  v.o34 = a * e + 2 * (a * b + c * e) + b * c;
  return v;
}

TwoSplitInstance two_split_instance(unsigned n1, unsigned n2, unsigned n3, unsigned n4) {
  if (n1 == 0 || n2 == 0 || n3 == 0 || n4 == 0)
    throw std::invalid_argument("block sizes must be positive");
  const std::array<unsigned, 4> sizes{n1, n2, n3, n4};
  std::vector<int> block;
  for (int b = 0; b < 4; ++b) block.insert(block.end(), sizes[b], b);
  const std::size_t n = block.size();
  // Blocks: 0 = A1∩A2, 1 = B1∩A2, 2 = A1∩B2, 3 = B1∩B2.
  ElementSet a1(n), a2(n);
  for (Element x = 0; x < n; ++x) {
    if (block[x] == 0 || block[x] == 2) a1.set(x);
    if (block[x] == 0 || block[x] == 1) a2.set(x);
  }
  Split first(a1), second(a2);
  WeightedSplitSystem system(GroundSet::numbered(n), {{first, Rational(2)}, {second, Rational(2)}});
  return {std::move(system), first, second, std::move(block)};
}

std::size_t count_tight_midpath(std::size_t n, std::size_t trials, std::uint64_t seed) {
  std::size_t tight = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(seed + t);
    const auto d = random_one_two_matrix(n, rng);
    if (midpath_split_system(d).x_splits.size() == n * (n - 1)) ++tight;
  }
  return tight;
}

}  // namespace ordist
