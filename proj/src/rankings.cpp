#include "ordist/rankings.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ordist {

PartialRanking::PartialRanking(GroundSet ground, std::vector<std::vector<Element>> blocks)
    : ground_(std::move(ground)), blocks_(std::move(blocks)) {
  const std::size_t n = ground_.size();
  constexpr auto unset = static_cast<std::size_t>(-1);
  block_index_.assign(n, unset);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw std::invalid_argument("ranking blocks must be non-empty");
    for (Element e : blocks_[b]) {
      if (e >= n) throw std::invalid_argument("ranking element out of range");
      if (block_index_[e] != unset) throw std::invalid_argument("element ranked twice");
      block_index_[e] = b;
    }
  }
  if (std::find(block_index_.begin(), block_index_.end(), unset) != block_index_.end())
    throw std::invalid_argument("ranking must cover the ground set");
}

PartialRanking PartialRanking::reversed() const {
  return PartialRanking(ground_, {blocks_.rbegin(), blocks_.rend()});
}

PartialRanking ranking_from_distance(const DistanceMatrix& d, Element x) {
  const std::size_t n = d.size();
  if (x >= n) throw std::out_of_range("element index out of range");
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return d(x, a) < d(x, b); });
  std::vector<std::vector<Element>> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || d(x, order[i]) != d(x, order[i - 1])) blocks.emplace_back();
    blocks.back().push_back(order[i]);
  }
  return PartialRanking(d.ground(), std::move(blocks));
}

namespace {

void check_compatible(const PartialRanking& r1, const PartialRanking& r2) {
  if (!(r1.ground() == r2.ground()))
    throw std::invalid_argument("rankings are over different ground sets");
}

std::uint64_t pairs(std::uint64_t k) { return k * (k - 1) / 2; }

// Counts i < j with v[i] > v[j]; sorts v.
std::uint64_t strict_inversions(std::vector<std::size_t>& v, std::vector<std::size_t>& buffer,
                                std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t count = strict_inversions(v, buffer, lo, mid) + strict_inversions(v, buffer, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      count += mid - i;
      buffer[k++] = v[j++];
    } else {
      buffer[k++] = v[i++];
    }
  }
  while (i < mid) buffer[k++] = v[i++];
  while (j < hi) buffer[k++] = v[j++];
  std::copy(buffer.begin() + lo, buffer.begin() + hi, v.begin() + lo);
  return count;
}

}  // namespace

KendallCounts kendall_counts(const PartialRanking& r1, const PartialRanking& r2) {
  check_compatible(r1, r2);
  const std::size_t n = r1.size();
  const auto& b1 = r1.block_index();
  const auto& b2 = r2.block_index();

  std::vector<std::pair<std::size_t, std::size_t>> keyed(n);
  for (Element e = 0; e < n; ++e) keyed[e] = {b1[e], b2[e]};
  std::sort(keyed.begin(), keyed.end());

  std::uint64_t tied1 = 0, tied_both = 0;
  for (const auto& block : r1.blocks()) tied1 += pairs(block.size());
  std::uint64_t tied2 = 0;
  for (const auto& block : r2.blocks()) tied2 += pairs(block.size());
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && keyed[j] == keyed[i]) ++j;
    tied_both += pairs(j - i);
    i = j;
  }

  // Within equal r1 blocks the r2 keys are ascending, so only pairs strictly ordered in
  // r1 can form strict inversions.
  std::vector<std::size_t> second(n), buffer(n);
  for (std::size_t i = 0; i < n; ++i) second[i] = keyed[i].second;
  KendallCounts out;
  out.discordant = strict_inversions(second, buffer, 0, n);
  out.tied_in_one = tied1 + tied2 - 2 * tied_both;
  return out;
}

KendallCounts kendall_counts_naive(const PartialRanking& r1, const PartialRanking& r2) {
  check_compatible(r1, r2);
  const std::size_t n = r1.size();
  const auto& b1 = r1.block_index();
  const auto& b2 = r2.block_index();
  KendallCounts out;
  for (Element u = 0; u < n; ++u) {
    for (Element v = u + 1; v < n; ++v) {
      const bool tie1 = b1[u] == b1[v];
      const bool tie2 = b2[u] == b2[v];
      if (tie1 != tie2) {
        ++out.tied_in_one;
      } else if (!tie1 && ((b1[u] < b1[v]) != (b2[u] < b2[v]))) {
        ++out.discordant;
      }
    }
  }
  return out;
}

namespace {

Rational penalized(const KendallCounts& c, const Rational& pi) {
  if (pi < 0) throw std::invalid_argument("Kendall penalty must be non-negative");
  return Rational(static_cast<unsigned long>(c.discordant)) +
         pi * Rational(static_cast<unsigned long>(c.tied_in_one));
}

}  // namespace

Rational kendall_penalized(const PartialRanking& r1, const PartialRanking& r2, const Rational& pi) {
  return penalized(kendall_counts(r1, r2), pi);
}

Rational kendall_penalized_naive(const PartialRanking& r1, const PartialRanking& r2,
                                 const Rational& pi) {
  return penalized(kendall_counts_naive(r1, r2), pi);
}

}  // namespace ordist
