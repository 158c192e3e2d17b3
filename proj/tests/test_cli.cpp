#include "ordist/cli.hpp"
#include "ordist/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace testing;
using ordist::cli::run;

namespace {

const std::string dir = ORDIST_FIXTURE_DIR;

std::string fixture(const char* name) { return dir + "/" + name; }

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / (std::string("ordist_test_") + name);
}

DistanceMatrix matrix_of(const std::string& text) {
  std::istringstream in(text);
  return io::read_matrix(in);
}

}  // namespace

TEST_CASE("order subcommand") {
  const auto out = run({"order", "-i", fixture("ultrametric5.dist"), "-p", "2", "-q", "1"});
  REQUIRE(out.exit_code == 0);
  const auto o = matrix_of(out.report);
  CHECK(o(o.ground().index_of("a"), o.ground().index_of("c")) == 13);

  for (const char* algo : {"eq1", "kendall"}) {
    const auto z = run({"order", "-i", fixture("zero4.dist"), "-p", "2", "-q", "1", "--algo", algo});
    REQUIRE(z.exit_code == 0);
    CHECK(matrix_of(z.report).is_zero());
  }

  const auto c = run({"order", "-i", fixture("circular4.dist"), "-p", "3", "-q", "1.5", "--algo",
                      "circular"});
  REQUIRE(c.exit_code == 0);
  const auto e = run({"order", "-i", fixture("circular4.dist"), "-p", "3", "-q", "3/2"});
  CHECK(matrix_of(c.report) == matrix_of(e.report));

  // fixture names work in place of files
  CHECK(run({"order", "-i", "circular4", "-p", "2", "-q", "1"}).exit_code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"order"}).exit_code == 2);
  CHECK(run({"order", "-i", "no_such_file.dist"}).exit_code == 2);
  CHECK(run({"order", "-i", fixture("zero4.dist"), "-p", "x"}).exit_code == 2);
  CHECK(run({"order", "-i", fixture("zero4.dist"), "-p", "2", "-q", "0.5"}).exit_code == 2);
  CHECK(run({"order", "-i", fixture("zero4.dist"), "--algo", "fast"}).exit_code == 2);
  CHECK(run({"check", "sideways", "-s", fixture("S1_5.splits")}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
  CHECK_FALSE(run({"--help"}).report.empty());

  // preconditions
  CHECK(run({"order", "-i", fixture("circular4.dist"), "-p", "2", "-q", "2", "--algo", "circular"})
            .exit_code == 3);
  CHECK(run({"order", "-i", fixture("six_point.dist"), "-p", "2", "-q", "1", "--algo", "circular"})
            .exit_code == 3);

  const auto bad = temp_file("bad.dist");
  { std::ofstream(bad) << "2\na 0 1\nb 2 0\n"; }
  const auto parse = run({"order", "-i", bad.string()});
  CHECK(parse.exit_code == 2);
  CHECK(parse.diagnostics.find("asymmetric") != std::string::npos);
}

TEST_CASE("check subcommand") {
  const auto s1 = fixture("S1_5.splits");
  auto circ = run({"check", "circular", "-s", s1});
  CHECK(circ.exit_code == 0);
  CHECK(circ.report.find("circular: false") != std::string::npos);
  CHECK(run({"check", "circular", "-s", s1, "--strict"}).exit_code == 1);

  const auto flat = run({"check", "flat", "-s", s1, "--strict"});
  CHECK(flat.exit_code == 0);
  CHECK(flat.report.find("maximum_flat: true") != std::string::npos);

  CHECK(run({"check", "closed", "-s", s1}).report.find("closed: false") != std::string::npos);
  CHECK(run({"check", "pairsep", "-s", s1}).report.find("pairwise_separation: true") !=
        std::string::npos);
  CHECK(run({"check", "independent", "-s", s1}).report.find("rank: 10") != std::string::npos);
  CHECK(run({"check", "compat", "-s", fixture("tree5.splits"), "--strict"}).exit_code == 0);
  CHECK(run({"check", "compat", "-s", s1, "--strict"}).exit_code == 1);

  const auto good = run({"check", "circular", "-s", "max_circular5"});
  CHECK(good.report.find("ordering: a b c d e") != std::string::npos);

  const auto tiny = temp_file("tiny.splits");
  { std::ofstream(tiny) << "3\na b c\na | b,c\n"; }
  CHECK(run({"check", "closed", "-s", tiny.string()}).exit_code == 3);
}

TEST_CASE("midpath subcommand") {
  const auto out = run({"midpath", "-i", fixture("six_point.dist"), "--witness"});
  REQUIRE(out.exit_code == 0);
  CHECK(out.report.find("compatible: false") != std::string::npos);
  CHECK(out.report.find("x {b,t,y}|{a,s,x}") != std::string::npos);
  CHECK(out.report.find("witness: a=") != std::string::npos);
  const auto z = run({"midpath", "-i", fixture("zero4.dist"), "--witness"});
  CHECK(z.report.find("midpath_splits: 0") != std::string::npos);
  CHECK(z.report.find("witness: none") != std::string::npos);
}

TEST_CASE("decompose subcommand") {
  const auto o = temp_file("o.dist");
  REQUIRE(run({"order", "-i", fixture("circular4.dist"), "-p", "2", "-q", "1", "-o", o.string()})
              .exit_code == 0);
  const auto ok = run({"decompose", "-i", o.string(), "-s", fixture("circular4_superset.splits")});
  REQUIRE(ok.exit_code == 0);
  CHECK(ok.report.find("result: OK") != std::string::npos);
  CHECK(ok.report.find("{b}|{a,c,d} : 4") != std::string::npos);

  const auto miss = run({"decompose", "-i", o.string(), "-s", fixture("circular4.splits")});
  CHECK(miss.report.find("NOT-IN-SPAN") != std::string::npos);
  CHECK(run({"decompose", "-i", o.string(), "-s", fixture("circular4.splits"), "--strict"})
            .exit_code == 1);

  const auto all4 = temp_file("all4.splits");
  {
    std::ofstream f(all4);
    io::write_splits(f, all_splits(GroundSet::lettered(4)));
  }
  CHECK(run({"decompose", "-i", o.string(), "-s", all4.string()}).exit_code == 3);
}

TEST_CASE("orderly subcommand") {
  const auto s1 = run({"orderly", "-s", fixture("S1_5.splits"), "--trials", "5", "--seed", "1"});
  REQUIRE(s1.exit_code == 0);
  CHECK(s1.report.find("verdict: counterexample") != std::string::npos);
  CHECK(s1.report.find("phase: 1") != std::string::npos);
  const auto pos = s1.report.find("weighting:\n");
  REQUIRE(pos != std::string::npos);
  std::istringstream weighting(s1.report.substr(pos + 11));
  const auto ws = io::read_splits(weighting);
  CHECK(check_weighting(fixtures::s1_5(), ws));

  const auto c = run({"orderly", "-s", "max_circular5", "--trials", "50", "--seed", "4"});
  CHECK(c.report.find("verdict: no-counterexample") != std::string::npos);
  CHECK(run({"orderly", "-s", fixture("S1_5.splits"), "--trials", "5"}).exit_code == 2);
}

TEST_CASE("gen subcommand") {
  for (const char* kind : {"tree", "circular", "flat"}) {
    const auto a = run({"gen", kind, "-n", "6", "--seed", "42"});
    const auto b = run({"gen", kind, "-n", "6", "--seed", "42"});
    REQUIRE(a.exit_code == 0);
    CHECK(a.report == b.report);
    std::istringstream in(a.report);
    const auto ws = io::read_splits(in);
    const std::size_t expected = std::string(kind) == "tree" ? 9 : 15;
    CHECK(ws.size() == expected);
  }
  const auto path = temp_file("flat.splits");
  REQUIRE(run({"gen", "flat", "-n", "7", "--seed", "3", "-o", path.string()}).exit_code == 0);
  CHECK(is_maximum_flat(io::read_splits_file(path).splits()));
  CHECK(run({"gen", "tree", "-n", "2", "--seed", "1"}).exit_code == 3);
}

TEST_CASE("bench subcommand") {
  const auto out = run({"bench", "-n", "16", "--seed", "2"});
  CHECK(out.exit_code == 0);
  CHECK(out.report.find("engines_agree: true") != std::string::npos);
}

TEST_CASE("output does not depend on the thread count") {
  std::string previous;
  for (const char* threads : {"1", "3", "8"}) {
    setenv("ORDIST_THREADS", threads, 1);
    const auto out = run({"midpath", "-i", fixture("six_point.dist")}).report +
                     run({"order", "-i", fixture("six_point.dist"), "-q", "7/4", "--algo", "kendall"}).report;
    if (!previous.empty()) CHECK(out == previous);
    previous = out;
  }
  unsetenv("ORDIST_THREADS");
}
