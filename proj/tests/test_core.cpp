#include "support.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("1.5") == r(3, 2));
  CHECK(parse_rational("3/6") == r(1, 2));
  CHECK(parse_rational("-.5") == r(-1, 2));
  CHECK(parse_rational("2e-3") == r(1, 500));
  CHECK(parse_rational("1.25E2") == r(125));
  CHECK(parse_rational("+7") == r(7));
  CHECK(parse_rational("0.1") + parse_rational("0.2") == parse_rational("0.3"));
  for (const char* bad : {"", "a", "1/0", "1.2.3", "1e", "/3", "3/", "--1", "1 2"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  CHECK(to_string(r(6, 4)) == "3/2");
  CHECK(to_string(r(-4)) == "-4");
}

TEST_CASE("ground set validation") {
  CHECK_THROWS(GroundSet({"a", "a"}));
  CHECK_THROWS(GroundSet({"a", ""}));
  CHECK_THROWS(GroundSet({"a b"}));
  CHECK_THROWS(GroundSet({"a,b"}));
  CHECK_THROWS(GroundSet({}));
  const auto g = GroundSet::lettered(3);
  CHECK(g.index_of("c") == 2);
  CHECK_FALSE(g.find("z"));
  CHECK_THROWS(g.index_of("z"));
  CHECK(GroundSet::numbered(2).label(1) == "x2");
}

TEST_CASE("distance matrix invariants") {
  const auto g = GroundSet::lettered(2);
  CHECK_THROWS(DistanceMatrix(g, {r(0), r(1), r(2), r(0)}));
  CHECK_THROWS(DistanceMatrix(g, {r(1), r(1), r(1), r(0)}));
  CHECK_THROWS(DistanceMatrix(g, {r(0), r(-1), r(-1), r(0)}));
  CHECK_THROWS(DistanceMatrix(g, {r(0)}));
  CHECK_NOTHROW(DistanceMatrix(GroundSet::lettered(1), {r(0)}));
  CHECK(DistanceMatrix::zero(g).is_zero());
}

TEST_CASE("splits are canonical and reject degenerate parts") {
  const auto g = GroundSet::lettered(5);
  CHECK(sp(g, "a,b") == sp(g, "c,d,e"));
  CHECK(Split(5, {0, 1}).side() == Split(5, {2, 3, 4}).side());
  CHECK_THROWS(Split(5, std::vector<Element>{}));
  CHECK_THROWS(Split(5, {0, 1, 2, 3, 4}));
  CHECK_THROWS(Split(1, {0}));
  CHECK(sp(g, "c,d").to_string(g) == "{c,d}|{a,b,e}");
  CHECK(sp(g, "a").is_trivial());
  CHECK(sp(g, "a,b").min_part_size() == 2);

  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = rng.uniform(2, 12);
    ElementSet side(n);
    for (std::size_t i = 0; i < n; ++i)
      if (rng.coin()) side.set(i);
    if (side.none() || side.all()) continue;
    CHECK(Split(side) == Split(~side));
    CHECK(!Split(side).side().test(0));
  }
}

TEST_CASE("order parameters") {
  CHECK_NOTHROW(OrderParams(r(2), r(1)));
  CHECK_THROWS(OrderParams(r(0), r(1)));
  CHECK_THROWS(OrderParams(r(2), r(1, 2)));
  CHECK(OrderParams(r(2), r(3)).penalty() == r(3, 2));
}

TEST_CASE("split metric") {
  const auto g = GroundSet::lettered(5);
  const auto s = sp(g, "a,b");
  CHECK(split_metric(s, 0, 2) == 1);
  CHECK(split_metric(s, 0, 1) == 0);
  for (Element x = 0; x < 5; ++x) CHECK(split_metric(s, x, x) == 0);
}

TEST_CASE("generate distance of the four-point circular system") {
  const auto d = generate_distance(fixtures::circular4());
  const auto& g = d.ground();
  auto at = [&](const char* x, const char* y) { return d(g.index_of(x), g.index_of(y)); };
  CHECK(at("a", "b") == 2);
  CHECK(at("a", "c") == 2);
  CHECK(at("a", "d") == 1);
  CHECK(at("b", "c") == 2);
  CHECK(at("b", "d") == 3);
  CHECK(at("c", "d") == 1);
  CHECK(d == summed(fixtures::circular4()));
}

TEST_CASE("generate distance edge cases") {
  const auto g = GroundSet::lettered(4);
  WeightedSplitSystem zero(g);
  zero.add(sp(g, "a,b"), r(0));
  CHECK(generate_distance(zero).is_zero());
  CHECK(generate_distance(WeightedSplitSystem(g)).is_zero());

  WeightedSplitSystem one(g);
  one.add(sp(g, "a,c"), r(7, 3));
  const auto d = generate_distance(one);
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y)
      CHECK(d(x, y) == (sp(g, "a,c").separates(x, y) ? r(7, 3) : r(0)));
  CHECK_THROWS(one.add(sp(g, "a"), r(-1)));
}

TEST_CASE("generate distance is linear and valid") {
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = rng.uniform(2, 9);
    const auto g = GroundSet::lettered(n);
    const auto all = all_splits(g);
    WeightedSplitSystem w1(g), w2(g), sum(g);
    for (const auto& s : all) {
      if (rng.uniform(0, 2) == 0) {
        const auto a = random_rational(rng, 9, 4), b = random_rational(rng, 9, 4);
        w1.add(s, a);
        w2.add(s, b);
        sum.add(s, a + b);
      }
    }
    const auto d = generate_distance(sum);
    CHECK(d == generate_distance(w1) + generate_distance(w2));
    CHECK(d == summed(sum));
    CHECK(d.satisfies_triangle_inequality());
  }
}

TEST_CASE("restriction") {
  const auto g = GroundSet::lettered(5);
  SplitSystem s(g);
  s.insert(sp(g, "a,b"));
  const std::vector<Element> ab{0, 1};
  CHECK(restrict_split_system(s, ab).empty());

  s.insert(sp(g, "a"));
  const std::vector<Element> acd{0, 2, 3};
  const auto rs = restrict_split_system(s, acd);
  CHECK(rs.size() == 1);
  CHECK(rs.contains(sp(rs.ground(), "a")));
  CHECK(rs.ground().labels() == std::vector<std::string>{"a", "c", "d"});

  const std::vector<Element> single{0};
  CHECK_THROWS(restrict_split_system(s, single));

  for (const auto& sys : {fixtures::s1_5(), fixtures::s2_5()})
    for (const auto& y : subsets_of_size(5, 4)) CHECK(restrict_split_system(sys, y).size() == 6);
}

TEST_CASE("all splits") {
  CHECK(all_splits(GroundSet::lettered(4)).size() == 7);
  CHECK(all_splits(GroundSet::lettered(6)).size() == 31);
}

TEST_CASE("matrix restriction and arithmetic") {
  const auto d = fixtures::six_point();
  const std::vector<Element> keep{5, 0};
  const auto r2 = d.restrict_to(keep);
  CHECK(r2.ground().labels() == std::vector<std::string>{"y", "a"});
  CHECK(r2(0, 1) == 14);
  CHECK((r(2) * d)(0, 1) == 12);
  CHECK((d + d)(4, 5) == 30);
}
