#include "ordist/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace testing;

namespace {

DistanceMatrix parse_m(const std::string& text) {
  std::istringstream in(text);
  return io::read_matrix(in);
}

WeightedSplitSystem parse_s(const std::string& text) {
  std::istringstream in(text);
  return io::read_splits(in);
}

}  // namespace

TEST_CASE("matrix format") {
  const auto d = parse_m("# comment\n\n3\na 0 1.5 33333/50000\nb 3/2 0 1\n# mid\nc 6.6666e-1 1 0\n");
  CHECK(d.size() == 3);
  CHECK(d(0, 1) == r(3, 2));
  CHECK(d.ground().label(2) == "c");
  CHECK_THROWS_AS(parse_m("3\na 0 1 2\nb 1 0 1\nc 0.6 1 0\n"), io::ParseError);  // 0.6 != 2/3
  CHECK_THROWS_AS(parse_m("2\na 0 1\nb 2 0\n"), io::ParseError);
  CHECK_THROWS_AS(parse_m("2\na 0 1\n"), io::ParseError);
  CHECK_THROWS_AS(parse_m("2\na 0 x\nb 1 0\n"), io::ParseError);
  CHECK_THROWS_AS(parse_m("2\na 0 1\na 1 0\n"), io::ParseError);
  CHECK_THROWS_AS(parse_m("0\n"), io::ParseError);
  CHECK_THROWS_AS(parse_m("2\na 0 1 4\nb 1 0\n"), io::ParseError);
  CHECK_THROWS_AS(parse_m("1\na 0\nb\n"), io::ParseError);
  try {
    parse_m("2\na 0 1\nb 1 q\n");
  } catch (const io::ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("split format") {
  const auto ws = parse_s("3\nx y z\nx | y,z\ny , x|z : 3/2\n");
  CHECK(ws.size() == 2);
  const auto& g = ws.ground();
  CHECK(ws.weight(sp(g, "x")) == 1);
  CHECK(ws.weight(sp(g, "z")) == r(3, 2));
  CHECK_THROWS_AS(parse_s("3\nx y z\nx | y\n"), io::ParseError);
  CHECK_THROWS_AS(parse_s("3\nx y z\nx,y | y,z\n"), io::ParseError);
  CHECK_THROWS_AS(parse_s("3\nx y z\nx | y,z\ny,z | x\n"), io::ParseError);
  CHECK_THROWS_AS(parse_s("3\nx y z\nx | y,w\n"), io::ParseError);
  CHECK_THROWS_AS(parse_s("3\nx y z\nx | y,z : -1\n"), io::ParseError);
  CHECK_THROWS_AS(parse_s("3\nx y\n"), io::ParseError);
  CHECK_THROWS_AS(parse_s("3\nx y z\nx y z\n"), io::ParseError);
  CHECK_THROWS_AS(parse_s("3\nx y z\n | x,y,z\n"), io::ParseError);
}

TEST_CASE("round trips are exact") {
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = rng.uniform(1, 8);
    const auto g = GroundSet::numbered(n, "v");
    const auto d = DistanceMatrix::from_pairs(g, [&](Element, Element) {
      return random_rational(rng, 50, 7);
    });
    std::stringstream buf;
    io::write_matrix(buf, d);
    CHECK(io::read_matrix(buf) == d);

    if (n < 2) continue;
    WeightedSplitSystem ws(g);
    for (const auto& s : all_splits(g))
      if (rng.coin()) ws.add(s, random_rational(rng, 20, 5));
    std::stringstream sbuf;
    io::write_splits(sbuf, ws);
    CHECK(io::read_splits(sbuf) == ws);
  }
}

TEST_CASE("shipped fixture files match the built-in fixtures") {
  const std::string dir = ORDIST_FIXTURE_DIR;
  CHECK(io::read_matrix_file(dir + "/six_point.dist") == fixtures::six_point());
  CHECK(io::read_matrix_file(dir + "/circular4.dist") == generate_distance(fixtures::circular4()));
  CHECK(io::read_matrix_file(dir + "/ultrametric5.dist") ==
        generate_distance(fixtures::ultrametric5()));
  CHECK(io::read_matrix_file(dir + "/zero4.dist").is_zero());
  CHECK(io::read_splits_file(dir + "/S1_5.splits").splits() == fixtures::s1_5());
  CHECK(io::read_splits_file(dir + "/S2_5.splits").splits() == fixtures::s2_5());
  CHECK(io::read_splits_file(dir + "/tree5.splits").splits() == fixtures::tree5());
  CHECK(io::read_splits_file(dir + "/circular4_superset.splits") == fixtures::circular4_superset());
  CHECK(io::read_splits_file(dir + "/max_circular5.splits").splits() == fixtures::max_circular(5));
  CHECK_THROWS_AS(io::read_matrix_file(dir + "/missing.dist"), io::ParseError);
}
