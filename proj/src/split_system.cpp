#include "ordist/split_system.hpp"

#include <stdexcept>

namespace ordist {

namespace {

void check_ground(const GroundSet& ground, const Split& s) {
  if (s.ground_size() != ground.size())
    throw std::invalid_argument("split does not match ground set size");
}

}  // namespace

SplitSystem::SplitSystem(GroundSet ground, std::set<Split> splits)
    : ground_(std::move(ground)), splits_(std::move(splits)) {
  for (const auto& s : splits_) check_ground(ground_, s);
}

bool SplitSystem::insert(const Split& s) {
  check_ground(ground_, s);
  return splits_.insert(s).second;
}

WeightedSplitSystem::WeightedSplitSystem(GroundSet ground, std::map<Split, Rational> weights)
    : ground_(std::move(ground)), weights_(std::move(weights)) {
  for (auto& [s, w] : weights_) {
    check_ground(ground_, s);
    w.canonicalize();
    if (w < 0) throw std::invalid_argument("split weights must be non-negative");
  }
}

WeightedSplitSystem WeightedSplitSystem::uniform(const SplitSystem& system,
                                                 const Rational& weight) {
  std::map<Split, Rational> weights;
  for (const auto& s : system) weights.emplace(s, weight);
  return WeightedSplitSystem(system.ground(), std::move(weights));
}

Rational WeightedSplitSystem::weight(const Split& s) const {
  auto it = weights_.find(s);
  return it == weights_.end() ? Rational(0) : it->second;
}

void WeightedSplitSystem::add(const Split& s, const Rational& w) {
  check_ground(ground_, s);
  Rational c = w;
  c.canonicalize();
  if (c < 0) throw std::invalid_argument("split weights must be non-negative");
  weights_[s] += c;
}

SplitSystem WeightedSplitSystem::support() const {
  SplitSystem out(ground_);
  for (const auto& [s, w] : weights_)
    if (w > 0) out.insert(s);
  return out;
}

SplitSystem WeightedSplitSystem::splits() const {
  SplitSystem out(ground_);
  for (const auto& [s, w] : weights_) out.insert(s);
  return out;
}

OrderParams::OrderParams(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {
  p_.canonicalize();
  q_.canonicalize();
  if (p_ <= 0) throw std::invalid_argument("order distance needs p > 0");
  if (2 * q_ < p_) throw std::invalid_argument("order distance needs q >= p/2");
}

Rational split_metric(const Split& s, Element x, Element y) {
  if (x >= s.ground_size() || y >= s.ground_size())
    throw std::out_of_range("element index out of range");
  return s.separates(x, y) ? Rational(1) : Rational(0);
}

DistanceMatrix generate_distance(const WeightedSplitSystem& ws) {
  const std::size_t n = ws.ground().size();
  std::vector<Rational> entries(n * n);
  for (const auto& [s, w] : ws.weights()) {
    if (w == 0) continue;
    const auto inside = elements_of(s.side());
    const auto outside = elements_of(s.other_side());
    for (Element x : inside) {
      for (Element y : outside) {
        entries[x * n + y] += w;
        entries[y * n + x] += w;
      }
    }
  }
  return DistanceMatrix(ws.ground(), std::move(entries));
}

SplitSystem restrict_split_system(const SplitSystem& system, std::span<const Element> subset) {
  if (subset.size() < 2) throw std::invalid_argument("restriction needs at least two elements");
  const std::size_t m = subset.size();
  SplitSystem out(system.ground().subset(subset));
  for (const auto& s : system) {
    ElementSet part(m);
    for (std::size_t i = 0; i < m; ++i)
      if (s.side().test(subset[i])) part.set(i);
    if (part.none() || part.all()) continue;
    out.insert(Split(std::move(part)));
  }
  return out;
}

SplitSystem all_splits(const GroundSet& ground) {
  const std::size_t n = ground.size();
  if (n > 24) throw std::invalid_argument("all_splits limited to n <= 24");
  SplitSystem out(ground);
  if (n < 2) return out;
  // Sides are the non-empty subsets of {1..n-1}.
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    ElementSet side(n);
    for (std::size_t b = 0; b + 1 < n; ++b)
      if (mask >> b & 1) side.set(b + 1);
    out.insert(Split(std::move(side)));
  }
  return out;
}

}  // namespace ordist
