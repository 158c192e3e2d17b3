#include "ordist/fixtures.hpp"

#include "ordist/circular.hpp"

#include <sstream>
#include <stdexcept>

namespace ordist::fixtures {

namespace {

GroundSet letters(std::size_t n) { return GroundSet::lettered(n); }

WeightedSplitSystem weighted(const GroundSet& ground,
                             std::initializer_list<std::pair<const char*, int>> entries) {
  WeightedSplitSystem ws(ground);
  for (const auto& [side, w] : entries) ws.add(split_of(ground, side), Rational(w));
  return ws;
}

SplitSystem unweighted(const GroundSet& ground, std::initializer_list<const char*> sides) {
  SplitSystem s(ground);
  for (const char* side : sides) s.insert(split_of(ground, side));
  return s;
}

}  // namespace

Split split_of(const GroundSet& ground, std::string_view side) {
  ElementSet set(ground.size());
  std::size_t start = 0;
  while (start <= side.size()) {
    const auto comma = side.find(',', start);
    const auto end = comma == std::string_view::npos ? side.size() : comma;
    set.set(ground.index_of(side.substr(start, end - start)));
    start = end + 1;
  }
  return Split(set);
}

WeightedSplitSystem ultrametric5() {
  return weighted(letters(5), {{"b", 2}, {"e", 2}, {"a", 4}, {"c", 1}, {"d", 1}, {"c,d", 1}});
}

WeightedSplitSystem circular4() {
  return weighted(letters(4), {{"b", 1}, {"a,b", 1}, {"a,d", 1}});
}

WeightedSplitSystem circular4_superset() {
  return weighted(letters(4), {{"a,b", 3}, {"a,d", 3}, {"a", 1}, {"c", 1}, {"b", 4}});
}

DistanceMatrix six_point() {
  const std::vector<int> v = {0,  6,  5, 4,  13, 14,  //
                              6,  0,  2, 3,  12, 11,  //
                              5,  2,  0, 1,  8,  9,   //
                              4,  3,  1, 0,  10, 7,   //
                              13, 12, 8, 10, 0,  15,  //
                              14, 11, 9, 7,  15, 0};
  std::vector<Rational> entries(v.begin(), v.end());
  return DistanceMatrix(GroundSet({"a", "b", "s", "t", "x", "y"}), std::move(entries));
}

SplitSystem tree5() {
  return unweighted(letters(5), {"a", "b", "c", "d", "e", "a,b", "a,b,c"});
}

SplitSystem s1_5() {
  return unweighted(letters(5),
                    {"a", "b", "c", "d", "a,b", "b,c", "c,d", "a,d", "a,e", "b,e"});
}

SplitSystem s2_5() {
  return unweighted(letters(5),
                    {"a", "b", "c", "a,b", "b,c", "c,d", "a,d", "a,c", "a,e", "b,e"});
}

SplitSystem max_circular(std::size_t n) {
  std::vector<Element> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  const CircularOrdering theta(order);
  SplitSystem s(letters(n));
  for (const auto& interval : all_intervals(n)) s.insert(interval_split(theta, interval));
  return s;
}

std::optional<WeightedSplitSystem> split_fixture(std::string_view name) {
  auto unit = [](const SplitSystem& s) { return WeightedSplitSystem::uniform(s, Rational(1)); };
  if (name == "S1_5") return unit(s1_5());
  if (name == "S2_5") return unit(s2_5());
  if (name == "tree5") return unit(tree5());
  if (name == "circular4") return circular4();
  if (name == "circular4_superset") return circular4_superset();
  if (name == "ultrametric5") return ultrametric5();
  if (name == "max_circular5") return unit(max_circular(5));
  return std::nullopt;
}

std::optional<DistanceMatrix> matrix_fixture(std::string_view name) {
  if (name == "six_point") return six_point();
  if (name == "ultrametric5") return generate_distance(ultrametric5());
  if (name == "circular4") return generate_distance(circular4());
  return std::nullopt;
}

std::vector<std::string> fixture_names() {
  return {"S1_5",          "S2_5",          "tree5",     "circular4", "circular4_superset",
          "ultrametric5",  "max_circular5", "six_point"};
}

}  // namespace ordist::fixtures
