#include "ordist/compat.hpp"
#include "ordist/flatlab.hpp"
#include "ordist/order.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace testing;

TEST_CASE("pairwise compatibility") {
  const auto g = GroundSet::lettered(5);
  CHECK(is_compatible_pair(sp(g, "a,b"), sp(g, "a")));
  CHECK(is_compatible_pair(sp(g, "a,b"), sp(g, "a,b")));
  CHECK(is_compatible_pair(sp(g, "a,b"), sp(g, "c,d")));
  CHECK_FALSE(is_compatible_pair(sp(g, "a,b"), sp(g, "b,c")));
  const auto g6 = fixtures::six_point().ground();
  CHECK_FALSE(is_compatible_pair(sp(g6, "b,t,y"), sp(g6, "b,s,x")));
  CHECK_THROWS(is_compatible_pair(sp(g, "a"), sp(g6, "a")));
}

TEST_CASE("system compatibility") {
  CHECK(is_compatible(fixtures::tree5()));
  CHECK(fixtures::tree5().size() == 7);
  const auto g6 = fixtures::six_point().ground();
  SplitSystem kearney(g6);
  kearney.insert(sp(g6, "b,t,y"));
  kearney.insert(sp(g6, "b,s,x"));
  kearney.insert(sp(g6, "a"));
  CHECK_FALSE(is_compatible(kearney));
  CHECK(first_incompatible_pair(kearney));
  SplitSystem one(g6);
  one.insert(sp(g6, "a,b"));
  CHECK(is_compatible(one));
  CHECK_FALSE(first_incompatible_pair(one));
}

TEST_CASE("star tree") {
  const auto g = GroundSet::lettered(4);
  WeightedSplitSystem ws(g);
  for (const char* x : {"a", "b", "c", "d"}) ws.add(sp(g, x), r(1));
  const auto tree = xtree_from_compatible(ws);
  CHECK(tree.vertex_count() == 5);
  CHECK(tree.edges().size() == 4);
  auto deg = tree.degrees();
  CHECK(std::count(deg.begin(), deg.end(), 4) == 1);
  CHECK(tree.edge_splits() == ws);
}

TEST_CASE("tree of the seven-split system") {
  const auto ws = WeightedSplitSystem::uniform(fixtures::tree5(), r(1));
  const auto tree = xtree_from_compatible(ws);
  CHECK(tree.edges().size() == 7);
  CHECK(tree.vertex_count() == 8);
  for (auto dg : tree.degrees()) CHECK((dg == 1 || dg == 3));
  CHECK(tree.edge_splits() == ws);
}

TEST_CASE("tree construction rejects incompatible input and handles labels on inner vertices") {
  const auto g = GroundSet::lettered(4);
  WeightedSplitSystem bad(g);
  bad.add(sp(g, "a,b"), r(1));
  bad.add(sp(g, "a,c"), r(1));
  CHECK_THROWS_AS(xtree_from_compatible(bad), std::invalid_argument);

  // no trivial split for a: a sits on an inner vertex
  WeightedSplitSystem partial(g);
  partial.add(sp(g, "c,d"), r(2));
  partial.add(sp(g, "d"), r(1));
  const auto tree = xtree_from_compatible(partial);
  CHECK(tree.edges().size() == 2);
  CHECK(tree.edge_splits() == partial);
  CHECK(tree.leaf_map()[0] == tree.leaf_map()[1]);
}

TEST_CASE("random binary trees round-trip and have 2n-3 splits") {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = rng.uniform(3, 14);
    const auto ws = random_binary_tree(GroundSet::lettered(n), 9, rng);
    CHECK(ws.size() == 2 * n - 3);
    CHECK(is_compatible(ws.splits()));
    CHECK(is_linearly_independent(ws.splits()));
    const auto tree = xtree_from_compatible(ws);
    CHECK(tree.edge_splits() == ws);
    CHECK(tree.vertex_count() == 2 * n - 2);
    // adding any further split breaks compatibility
    if (n <= 8) {
      for (const auto& s : all_splits(ws.ground())) {
        if (ws.splits().contains(s)) continue;
        auto bigger = ws.splits();
        bigger.insert(s);
        CHECK_FALSE(is_compatible(bigger));
      }
    }
  }
}

TEST_CASE("four-point condition") {
  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    const auto ws = random_binary_tree(GroundSet::lettered(rng.uniform(3, 9)), 5, rng);
    CHECK_FALSE(four_point_check(generate_distance(ws)));
  }
  CHECK_FALSE(four_point_check(generate_distance(fixtures::ultrametric5())));
  CHECK_FALSE(four_point_check(fixtures::six_point().restrict_to(std::vector<Element>{0, 1, 2})));

  const auto d = generate_distance(fixtures::ultrametric5());
  const auto o = order_distance_eq1(d, OrderParams(r(2), r(2)));
  const auto quad = four_point_check(o);
  REQUIRE(quad);
  const auto& g = o.ground();
  CHECK(*quad == std::array<Element, 4>{g.index_of("a"), g.index_of("b"), g.index_of("c"),
                                        g.index_of("e")});
  // first violation in lexicographic order: no earlier 4-subset fails
  for (const auto& s : subsets_of_size(5, 4)) {
    const auto sub = o.restrict_to(s);
    if (std::vector<Element>(quad->begin(), quad->end()) == s) break;
    CHECK_FALSE(four_point_check(sub));
  }
  // at q = p/2 the order distance stays treelike
  CHECK_FALSE(four_point_check(order_distance_eq1(d, OrderParams(r(2), r(1)))));
}

TEST_CASE("ultrametric") {
  CHECK(is_ultrametric(generate_distance(fixtures::ultrametric5())));
  const auto g = GroundSet::lettered(3);
  CHECK_FALSE(is_ultrametric(DistanceMatrix(g, {r(0), r(1), r(2), r(1), r(0), r(1), r(2), r(1), r(0)})));
  CHECK(is_ultrametric(DistanceMatrix::zero(g)));
}

TEST_CASE("six-point witness on the six-point table") {
  const auto d = fixtures::six_point();
  const auto w = six_point_witness(d);
  REQUIRE(w);
  CHECK(witness_holds(d, *w));
  CHECK(w->a != w->b);
  CHECK(w->s != w->t);
  CHECK(w->x != w->y);
  for (const auto& keep : subsets_of_size(6, 5)) {
    const auto sub = d.restrict_to(keep);
    CHECK_FALSE(six_point_witness(sub));
    CHECK(is_compatible(midpath_split_system(sub).midpath_splits()));
  }
}

TEST_CASE("six-point witness versus midpath compatibility") {
  Rng rng(77);
  int incompatible = 0;
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = rng.uniform(4, 6);
    const auto d = random_matrix(n, t % 2 ? 3 : 1000, rng);
    const auto w = six_point_witness(d);
    const bool compatible = is_compatible(midpath_split_system(d).midpath_splits());
    CHECK(w.has_value() == !compatible);
    if (w) CHECK(witness_holds(d, *w));
    incompatible += !compatible;
  }
  CHECK(incompatible > 0);
  for (int t = 0; t < 20; ++t) {
    const auto ws = random_binary_tree(GroundSet::lettered(rng.uniform(4, 7)), 6, rng);
    CHECK_FALSE(six_point_witness(generate_distance(ws)));
  }
  CHECK_FALSE(six_point_witness(DistanceMatrix::zero(GroundSet::lettered(2))));
}

TEST_CASE("maximum compatible systems are orderly for any q") {
  Rng rng(41);
  for (int t = 0; t < 25; ++t) {
    const auto ws = random_binary_tree(GroundSet::lettered(rng.uniform(5, 8)), 7, rng);
    const auto d = generate_distance(ws);
    for (auto [p, q] : {std::pair{2, 1}, {2, 3}, {1, 4}}) {
      const auto w = express_in_basis(order_distance_eq1(d, OrderParams(r(p), r(q))), ws.splits());
      REQUIRE(w);
      for (const auto& [s, x] : *w) CHECK(x >= 0);
    }
  }
}
