#include "ordist/circular.hpp"

#include "ordist/scaled_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ordist {

CircularOrdering::CircularOrdering(std::vector<Element> sequence)
    : sequence_(std::move(sequence)), position_(sequence_.size(), sequence_.size()) {
  const std::size_t n = sequence_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Element e = sequence_[i];
    if (e >= n || position_[e] != n)
      throw std::invalid_argument("circular ordering must be a permutation");
    position_[e] = i;
  }
}

CircularOrdering CircularOrdering::canonical() const {
  const std::size_t n = size();
  if (n == 0) return *this;
  std::vector<Element> out(n);
  const std::size_t start = position_of(0);
  for (std::size_t i = 0; i < n; ++i) out[i] = sequence_[(start + i) % n];
  if (n >= 3 && out[1] > out[n - 1]) std::reverse(out.begin() + 1, out.end());
  return CircularOrdering(std::move(out));
}

std::vector<IntervalSplit> all_intervals(std::size_t n) {
  std::vector<IntervalSplit> out;
  if (n < 2) return out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i; j + 1 < n; ++j) out.push_back({i, j});
  return out;
}

Split interval_split(const CircularOrdering& theta, const IntervalSplit& interval) {
  const std::size_t n = theta.size();
  if (interval.first > interval.last || interval.last + 1 >= n)
    throw std::invalid_argument("interval must satisfy first <= last < n-1");
  ElementSet side(n);
  for (std::size_t i = interval.first; i <= interval.last; ++i) side.set(theta[i]);
  return Split(std::move(side));
}

namespace {

void check_sizes(const DistanceMatrix& d, const CircularOrdering& theta) {
  if (d.size() != theta.size()) throw std::invalid_argument("ordering does not match matrix size");
}

// Weight of the cyclic arc cycle[start .. start+len-1] is half of
// D(a,c) + D(b,d) - D(a,d) - D(b,c) with a, b the elements either side of its start and
// c, d the elements either side of its end. Returns the sign of that expression.
int arc_weight_sign(const ScaledMatrix& m, const std::vector<Element>& cycle, std::size_t start,
                    std::size_t len) {
  const std::size_t k = cycle.size();
  const Element a = cycle[(start + k - 1) % k];
  const Element b = cycle[start % k];
  const Element c = cycle[(start + len - 1) % k];
  const Element d = cycle[(start + len) % k];
  return m.sum_compare(a, c, b, d, a, d, b, c);
}

bool all_weights_nonnegative(const ScaledMatrix& m, const std::vector<Element>& cycle) {
  const std::size_t k = cycle.size();
  for (std::size_t first = 0; first + 1 < k; ++first)
    for (std::size_t last = first; last + 1 < k; ++last)
      if (arc_weight_sign(m, cycle, first, last - first + 1) < 0) return false;
  return true;
}

}  // namespace

std::map<IntervalSplit, Rational> circular_weights(const DistanceMatrix& d,
                                                   const CircularOrdering& theta) {
  check_sizes(d, theta);
  const std::size_t n = d.size();
  std::map<IntervalSplit, Rational> out;
  for (const auto& iv : all_intervals(n)) {
    const Element a = theta[(iv.first + n - 1) % n];
    const Element b = theta[iv.first];
    const Element c = theta[iv.last];
    const Element e = theta[(iv.last + 1) % n];
    out.emplace(iv, (d(a, c) + d(b, e) - d(a, e) - d(b, c)) / 2);
  }
  return out;
}

bool is_circular_on(const DistanceMatrix& d, const CircularOrdering& theta) {
  check_sizes(d, theta);
  return all_weights_nonnegative(ScaledMatrix(d), theta.sequence());
}

std::optional<Quadruple> kalmanson_check_naive(const DistanceMatrix& d,
                                               const CircularOrdering& theta) {
  check_sizes(d, theta);
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          const Element xi = theta[i], xj = theta[j], xk = theta[k], xl = theta[l];
          const Rational diagonals = d(xi, xk) + d(xj, xl);
          if (d(xi, xj) + d(xk, xl) > diagonals || d(xi, xl) + d(xj, xk) > diagonals)
            return Quadruple{xi, xj, xk, xl};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Quadruple> kalmanson_check(const DistanceMatrix& d, const CircularOrdering& theta) {
  if (is_circular_on(d, theta)) return std::nullopt;
  // A negative weight may stem from a triangle-type violation only; scan for the real answer.
  return kalmanson_check_naive(d, theta);
}

bool fits_on_ordering(const SplitSystem& system, const CircularOrdering& theta) {
  const std::size_t n = theta.size();
  if (system.ground().size() != n) throw std::invalid_argument("ordering does not match ground set");
  for (const auto& s : system) {
    std::size_t boundaries = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (s.side().test(theta[i]) != s.side().test(theta[(i + 1) % n])) ++boundaries;
    if (boundaries != 2) return false;
  }
  return true;
}

namespace {

class OrderingSearch {
 public:
  explicit OrderingSearch(const ScaledMatrix& m) : m_(m), n_(m.size()) {}

  std::optional<std::vector<Element>> run() {
    cycle_ = {0};
    if (extend(1)) return cycle_;
    return std::nullopt;
  }

 private:
  // Only arcs with the element at `pos` among their four boundary elements change weight.
  bool insertion_ok(std::size_t pos) const {
    const std::size_t k = cycle_.size();
    for (std::size_t len = 1; len < k; ++len) {
      if (arc_weight_sign(m_, cycle_, pos, len) < 0) return false;
      if (arc_weight_sign(m_, cycle_, (pos + 1) % k, len) < 0) return false;
      if (arc_weight_sign(m_, cycle_, (pos + k + 1 - len) % k, len) < 0) return false;
      if (arc_weight_sign(m_, cycle_, (pos + k - len) % k, len) < 0) return false;
    }
    return true;
  }

  bool extend(Element next) {
    if (next == n_) return true;
    // With two elements on the cycle both gaps give mirror images.
    const std::size_t gaps = cycle_.size() <= 2 ? 1 : cycle_.size();
    for (std::size_t gap = 0; gap < gaps; ++gap) {
      const std::size_t pos = gap + 1;
      cycle_.insert(cycle_.begin() + static_cast<std::ptrdiff_t>(pos), next);
      if (insertion_ok(pos) && extend(next + 1)) return true;
      cycle_.erase(cycle_.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    return false;
  }

  const ScaledMatrix& m_;
  std::size_t n_;
  std::vector<Element> cycle_;
};

}  // namespace

std::optional<CircularOrdering> recover_circular_ordering(const DistanceMatrix& d) {
  const ScaledMatrix m(d);
  auto found = OrderingSearch(m).run();
  if (!found) return std::nullopt;
  CircularOrdering theta(std::move(*found));
  if (!all_weights_nonnegative(m, theta.sequence()) || kalmanson_check(d, theta))
    throw std::logic_error("recovered ordering failed verification");
  return theta.canonical();
}

namespace {

// Calls visit(theta) for every ordering with element 0 first and, for n >= 3, the second
// entry smaller than the last; stops early when visit returns true.
template <class Visit>
std::optional<CircularOrdering> for_each_ordering(std::size_t n, Visit visit) {
  if (n > 9) throw std::invalid_argument("exhaustive ordering search limited to n <= 9");
  std::vector<Element> seq(n);
  std::iota(seq.begin(), seq.end(), Element{0});
  if (n == 0) return std::nullopt;
  do {
    if (n >= 3 && seq[1] > seq[n - 1]) continue;
    CircularOrdering theta(seq);
    if (visit(theta)) return theta;
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
  return std::nullopt;
}

}  // namespace

std::optional<CircularOrdering> recover_circular_ordering_exhaustive(const DistanceMatrix& d) {
  if (!d.satisfies_triangle_inequality()) return std::nullopt;
  return for_each_ordering(d.size(), [&](const CircularOrdering& theta) {
    return !kalmanson_check_naive(d, theta).has_value();
  });
}

std::optional<CircularOrdering> is_circular_split_system(const SplitSystem& system) {
  if (system.empty()) throw std::invalid_argument("split system must be non-empty");
  const auto d = generate_distance(WeightedSplitSystem::uniform(system, Rational(1)));
  auto theta = recover_circular_ordering(d);
  if (theta && fits_on_ordering(system, *theta)) return theta;
  return std::nullopt;
}

std::optional<CircularOrdering> is_circular_split_system_exhaustive(const SplitSystem& system) {
  return for_each_ordering(system.ground().size(), [&](const CircularOrdering& theta) {
    return fits_on_ordering(system, theta);
  });
}

namespace {

// weight[first][last] over intervals; returns separated-pair totals indexed by position.
// cover[a][b] (a <= b) = total weight of intervals with first <= a and last >= b.
template <class T>
std::vector<T> interval_pair_sums(std::size_t n, const std::vector<T>& weight) {
  // (n+1) x (n+1) table shifted by one so index -1 and index n are zero borders.
  const std::size_t w = n + 1;
  std::vector<T> cover(w * w, T(0));
  auto at = [&](std::size_t a1, std::size_t b1) -> T& { return cover[a1 * w + b1]; };
  for (std::size_t a = 0; a + 1 < n; ++a) {
    for (std::size_t b = n - 1; b-- > a;) {
      // a1 = a + 1 and b1 = b + 1 are shifted indices.
      at(a + 1, b + 1) = weight[a * n + b] + at(a, b + 1) + at(a + 1, b + 2) - at(a, b + 2);
    }
  }
  std::vector<T> sums(n * n, T(0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const T value = at(a + 1, a + 1) + at(b + 1, b + 1) - at(a + 1, b + 1) - at(a + 1, b + 1);
      sums[a * n + b] = value;
      sums[b * n + a] = value;
    }
  }
  return sums;
}

DistanceMatrix by_element(const GroundSet& ground, const CircularOrdering& theta,
                          const std::vector<Rational>& by_position) {
  const std::size_t n = theta.size();
  std::vector<Rational> entries(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) entries[theta[a] * n + theta[b]] = by_position[a * n + b];
  return DistanceMatrix(ground, std::move(entries));
}

}  // namespace

DistanceMatrix evaluate_circular_distance(const GroundSet& ground, const CircularOrdering& theta,
                                          const std::map<IntervalSplit, Rational>& weights) {
  const std::size_t n = theta.size();
  if (ground.size() != n) throw std::invalid_argument("ordering does not match ground set");
  std::vector<Rational> table(n * n, Rational(0));
  for (const auto& [iv, w] : weights) {
    if (iv.first > iv.last || iv.last + 1 >= n) throw std::invalid_argument("invalid interval");
    if (w < 0) throw std::invalid_argument("interval weights must be non-negative");
    table[iv.first * n + iv.last] += w;
  }
  return by_element(ground, theta, interval_pair_sums(n, table));
}

DistanceMatrix order_distance_circular(const DistanceMatrix& d, const Rational& p,
                                       const CircularEngineOptions& options) {
  if (p <= 0) throw std::invalid_argument("order distance needs p > 0");
  const auto recovered = recover_circular_ordering(d);
  if (!recovered) throw std::invalid_argument("input distance is not circular");
  const CircularOrdering& theta = *recovered;
  const std::size_t n = d.size();
  const ScaledMatrix m(d);

  std::vector<std::int64_t> counts(n * n, 0);
  std::vector<bool> member(n);
  for (Element u = 0; u < n; ++u) {
    const std::size_t pu = theta.position_of(u);
    for (Element v = 0; v < n; ++v) {
      if (v == u || !m.is_positive(u, v)) continue;
      const std::size_t pv = theta.position_of(v);
      auto inside = [&](std::size_t pos) {
        const Element x = theta[pos];
        return m.less(u, x, v, x);
      };
      // Along either direction from u towards v, X_{u,v} is a prefix of the run.
      auto run_length = [&](std::size_t steps_to_v, bool forward) {
        std::size_t lo = 0, hi = steps_to_v - 1;  // answer in [lo, hi]
        while (lo < hi) {
          const std::size_t mid = (lo + hi + 1) / 2;
          const std::size_t pos = forward ? (pu + mid) % n : (pu + n - mid) % n;
          if (inside(pos)) {
            lo = mid;
          } else {
            hi = mid - 1;
          }
        }
        return lo;
      };
      const std::size_t ahead = (pv + n - pu) % n;
      const std::size_t right = run_length(ahead, true);
      const std::size_t left = run_length(n - ahead, false);
      std::size_t start = (pu + n - left) % n;
      std::size_t length = left + right + 1;

      if (options.confirm_arcs) {
        std::size_t scanned = 0;
        for (std::size_t pos = 0; pos < n; ++pos) {
          member[pos] = inside(pos);
          scanned += member[pos];
        }
        bool matches = scanned == length;
        for (std::size_t k = 0; matches && k < length; ++k) matches = member[(start + k) % n];
        if (!matches) {
          // Fall back to the scanned set; it must still be an arc through u.
          std::size_t lo = 0;
          while (lo + 1 < n && member[(pu + n - lo - 1) % n]) ++lo;
          std::size_t hi = 0;
          while (hi + 1 < n && member[(pu + hi + 1) % n]) ++hi;
          start = (pu + n - lo) % n;
          length = lo + hi + 1;
          if (length != scanned) throw std::invalid_argument("X_{u,v} is not an arc of the ordering");
        }
      }

      std::size_t first = start, last = start + length - 1;
      if (start + length >= n) {  // covers the last position; use the complementary arc
        first = start + length - n;
        last = start - 1;
      }
      ++counts[first * n + last];
    }
  }

  const auto separated = interval_pair_sums(n, counts);
  const Rational half_p = p / 2;
  std::vector<Rational> by_position(n * n);
  for (std::size_t k = 0; k < n * n; ++k)
    if (separated[k] != 0) by_position[k] = half_p * Rational(static_cast<long>(separated[k]));
  return by_element(d.ground(), theta, by_position);
}

}  // namespace ordist
