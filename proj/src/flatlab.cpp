#include "ordist/flatlab.hpp"

#include "ordist/compat.hpp"
#include "ordist/generators.hpp"
#include "ordist/order.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace ordist {

namespace {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Rows: splits; columns: element pairs (x<y) in lexicographic order.
std::vector<std::vector<mpz_class>> metric_rows(const SplitSystem& system) {
  const std::size_t n = system.ground().size();
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(system.size());
  for (const auto& s : system) {
    std::vector<mpz_class> row;
    row.reserve(pair_count(n));
    for (Element x = 0; x < n; ++x)
      for (Element y = x + 1; y < n; ++y) row.emplace_back(s.separates(x, y) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::size_t split_rank(const SplitSystem& system) {
  auto m = metric_rows(system);
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  mpz_class previous_pivot = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]);
        mpz_divexact(m[r][k].get_mpz_t(), m[r][k].get_mpz_t(), previous_pivot.get_mpz_t());
      }
      m[r][c] = 0;
    }
    previous_pivot = m[rank][c];
    ++rank;
  }
  return rank;
}

bool is_linearly_independent(const SplitSystem& system) {
  return split_rank(system) == system.size();
}

std::optional<std::map<Split, Rational>> express_in_basis(const DistanceMatrix& target,
                                                          const SplitSystem& basis) {
  const std::size_t n = basis.ground().size();
  if (target.size() != n) throw std::invalid_argument("target does not match ground set");
  const std::vector<Split> splits(basis.begin(), basis.end());
  const std::size_t unknowns = splits.size();
  const std::size_t equations = pair_count(n);

  // Augmented system: one equation per element pair.
  std::vector<std::vector<Rational>> a(equations, std::vector<Rational>(unknowns + 1));
  std::size_t row = 0;
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y, ++row) {
      for (std::size_t k = 0; k < unknowns; ++k) a[row][k] = splits[k].separates(x, y) ? 1 : 0;
      a[row][unknowns] = target(x, y);
    }

  std::vector<std::size_t> pivot_row(unknowns);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < unknowns; ++c) {
    std::size_t p = rank;
    while (p < equations && a[p][c] == 0) ++p;
    if (p == equations)
      throw std::invalid_argument("basis splits are linearly dependent");
    std::swap(a[p], a[rank]);
    const Rational inv = 1 / a[rank][c];
    for (std::size_t k = c; k <= unknowns; ++k) a[rank][k] *= inv;
    for (std::size_t r = 0; r < equations; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational factor = a[r][c];
      for (std::size_t k = c; k <= unknowns; ++k) a[r][k] -= factor * a[rank][k];
    }
    pivot_row[c] = rank++;
  }
  // Remaining equations must be satisfied exactly.
  for (std::size_t r = rank; r < equations; ++r)
    if (a[r][unknowns] != 0) return std::nullopt;

  std::map<Split, Rational> weights;
  for (std::size_t c = 0; c < unknowns; ++c) weights.emplace(splits[c], a[pivot_row[c]][unknowns]);
  return weights;
}

namespace {

bool contains_part(const SplitSystem& system, const ElementSet& part) {
  if (part.none() || part.all()) return false;
  return system.contains(Split(part));
}

bool pair_closed(const SplitSystem& system, const Split& s1, const Split& s2) {
  const ElementSet a1 = s1.side(), b1 = s1.other_side();
  const ElementSet a2 = s2.side(), b2 = s2.other_side();
  const ElementSet aa = a1 & a2, ba = b1 & a2, ab = a1 & b2, bb = b1 & b2;
  const std::size_t n1 = aa.count(), n2 = ba.count(), n3 = ab.count(), n4 = bb.count();
  const bool has_aa = contains_part(system, aa);
  const bool has_ba = contains_part(system, ba);
  const bool has_ab = contains_part(system, ab);
  const bool has_bb = contains_part(system, bb);
  const bool has_middle = contains_part(system, aa | bb);

  if (has_aa && has_ba && has_ab && has_bb) return true;                     // (a)
  const std::size_t lhs = n1 * n4, rhs = n2 * n3;
  if (lhs == rhs && has_middle) return true;                                 // (b)
  if (lhs > rhs && has_middle && has_aa && has_bb) return true;              // (c)
  if (lhs < rhs && has_middle && has_ba && has_ab) return true;              // (d)
  return false;
}

}  // namespace

std::optional<std::pair<Split, Split>> is_closed(const SplitSystem& system) {
  if (system.ground().size() < 4) throw std::invalid_argument("closedness needs n >= 4");
  for (auto i = system.begin(); i != system.end(); ++i)
    for (auto j = std::next(i); j != system.end(); ++j)
      if (!is_compatible_pair(*i, *j) && !pair_closed(system, *i, *j)) return std::pair{*i, *j};
  return std::nullopt;
}

namespace {

// `a` is a partition side of X - {x,y}; checks the four bipartitions built from it.
bool separates_pair(const SplitSystem& system, const ElementSet& a, Element x, Element y) {
  ElementSet b = ~a;
  b.reset(x);
  b.reset(y);
  ElementSet ax = a, ay = a, axy = a;
  ax.set(x);
  ay.set(y);
  axy.set(x).set(y);
  for (const ElementSet* part : std::array<const ElementSet*, 4>{&axy, &ax, &ay, &a}) {
    if (part->none() || part->all()) continue;  // not a split
    if (!system.contains(Split(*part))) return false;
  }
  return true;
}

void check_pairsep_input(const SplitSystem& system) {
  if (system.ground().size() < 2) throw std::invalid_argument("pairwise separation needs n >= 2");
}

}  // namespace

std::optional<std::pair<Element, Element>> pairwise_separation_check(const SplitSystem& system) {
  check_pairsep_input(system);
  const std::size_t n = system.ground().size();
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      bool found = false;
      for (const auto& s : system) {
        ElementSet a = s.side_of(x);
        a.reset(x);
        a.reset(y);
        if (separates_pair(system, a, x, y)) {
          found = true;
          break;
        }
      }
      if (!found) return std::pair{x, y};
    }
  return std::nullopt;
}

std::optional<std::pair<Element, Element>> pairwise_separation_check_exhaustive(
    const SplitSystem& system) {
  check_pairsep_input(system);
  const std::size_t n = system.ground().size();
  if (n > 20) throw std::invalid_argument("exhaustive pairwise separation limited to n <= 20");
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      std::vector<Element> rest;
      for (Element z = 0; z < n; ++z)
        if (z != x && z != y) rest.push_back(z);
      bool found = false;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()) && !found; ++mask) {
        ElementSet a(n);
        for (std::size_t k = 0; k < rest.size(); ++k)
          if (mask >> k & 1) a.set(rest[k]);
        found = separates_pair(system, a, x, y);
      }
      if (!found) return std::pair{x, y};
    }
  return std::nullopt;
}

namespace {

bool maximum_independent(const SplitSystem& system) {
  const std::size_t n = system.ground().size();
  return system.size() == pair_count(n) && is_linearly_independent(system);
}

}  // namespace

bool maximum_flat_by_restriction(const SplitSystem& system) {
  if (!maximum_independent(system)) return false;
  const std::size_t n = system.ground().size();
  std::array<Element, 4> y{};
  for (y[0] = 0; y[0] < n; ++y[0])
    for (y[1] = y[0] + 1; y[1] < n; ++y[1])
      for (y[2] = y[1] + 1; y[2] < n; ++y[2])
        for (y[3] = y[2] + 1; y[3] < n; ++y[3])
          if (restrict_split_system(system, y).size() != 6) return false;
  return true;
}

bool maximum_flat_by_separation(const SplitSystem& system) {
  return maximum_independent(system) && !pairwise_separation_check(system);
}

bool is_maximum_flat(const SplitSystem& system) {
  const bool by_restriction = maximum_flat_by_restriction(system);
  if (by_restriction != maximum_flat_by_separation(system))
    throw std::logic_error("maximum-flat routes disagree");
  return by_restriction;
}

void validate_allowable(const AllowablePair& pair) {
  const std::size_t n = pair.pi.size();
  std::vector<bool> seen(n, false);
  for (Element e : pair.pi) {
    if (e >= n || seen[e]) throw std::invalid_argument("pi must be a permutation");
    seen[e] = true;
  }
  if (pair.kappa.size() != pair_count(n))
    throw std::invalid_argument("kappa must have C(n,2) entries");
  std::vector<Element> current = pair.pi;
  std::vector<bool> swapped(n * n, false);
  for (std::size_t k : pair.kappa) {
    if (k < 1 || k >= n) throw std::invalid_argument("swap position out of range");
    const Element lo = std::min(current[k - 1], current[k]);
    const Element hi = std::max(current[k - 1], current[k]);
    if (swapped[lo * n + hi]) throw std::invalid_argument("element pair swaps more than once");
    swapped[lo * n + hi] = true;
    std::swap(current[k - 1], current[k]);
  }
}

SplitSystem allowable_splits(const GroundSet& ground, const AllowablePair& pair) {
  const std::size_t n = ground.size();
  if (pair.pi.size() != n) throw std::invalid_argument("pi does not match ground set");
  validate_allowable(pair);
  SplitSystem out(ground);
  std::vector<Element> current = pair.pi;
  for (std::size_t k : pair.kappa) {
    ElementSet prefix(n);
    for (std::size_t i = 0; i < k; ++i) prefix.set(current[i]);
    out.insert(Split(prefix));
    std::swap(current[k - 1], current[k]);
  }
  if (out.size() != pair_count(n)) throw std::logic_error("allowable splits are not distinct");
  return out;
}

AllowablePair random_allowable_pair(std::size_t n, Rng& rng) {
  AllowablePair out{random_permutation(n, rng), {}};
  std::vector<std::size_t> rank(n);  // position of each element in pi
  for (std::size_t i = 0; i < n; ++i) rank[out.pi[i]] = i;
  std::vector<Element> current = out.pi;
  std::vector<std::size_t> candidates;
  for (std::size_t step = 0; step < pair_count(n); ++step) {
    candidates.clear();
    for (std::size_t k = 1; k < n; ++k)
      if (rank[current[k - 1]] < rank[current[k]]) candidates.push_back(k);
    const std::size_t k = candidates[rng.uniform(0, candidates.size() - 1)];
    out.kappa.push_back(k);
    std::swap(current[k - 1], current[k]);
  }
  return out;
}

std::optional<CounterexampleFound> check_weighting(const SplitSystem& system,
                                                   const WeightedSplitSystem& weighting) {
  const auto d = generate_distance(weighting);
  const auto o = order_distance_eq1(d, OrderParams(Rational(2), Rational(1)));
  auto coefficients = express_in_basis(o, system);
  if (!coefficients) {
    return CounterexampleFound{weighting, CounterexampleFound::Reason::NotInSpan, 0, 0, {}, {}, {}};
  }
  for (const auto& [s, w] : *coefficients) {
    if (w < 0) {
      return CounterexampleFound{weighting, CounterexampleFound::Reason::NegativeWeight, 0, 0, {},
                                 s, std::move(coefficients)};
    }
  }
  return std::nullopt;
}

OrderlyVerdict orderly_test(const SplitSystem& system, std::size_t trials, std::uint64_t seed) {
  if (system.empty()) throw std::invalid_argument("split system must be non-empty");
  if (!is_linearly_independent(system))
    throw std::invalid_argument("orderly test needs a linearly independent split system");

  for (auto i = system.begin(); i != system.end(); ++i) {
    for (auto j = std::next(i); j != system.end(); ++j) {
      if (is_compatible_pair(*i, *j)) continue;
      WeightedSplitSystem weighting(system.ground());
      for (const auto& s : system) weighting.add(s, Rational(0));
      weighting.add(*i, Rational(2));
      weighting.add(*j, Rational(2));
      if (auto found = check_weighting(system, weighting)) {
        found->phase = 1;
        found->pair = std::pair{*i, *j};
        return *found;
      }
    }
  }

  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(seed + t);
    WeightedSplitSystem weighting(system.ground());
    for (const auto& s : system)
      weighting.add(s, Rational(static_cast<unsigned long>(rng.uniform(0, 20))));
    if (auto found = check_weighting(system, weighting)) {
      found->phase = 2;
      found->trial = t;
      return *found;
    }
  }
  return NoCounterexampleFound{trials};
}

}  // namespace ordist
