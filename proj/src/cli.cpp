#include "ordist/cli.hpp"

#include "ordist/circular.hpp"
#include "ordist/compat.hpp"
#include "ordist/fixtures.hpp"
#include "ordist/flatlab.hpp"
#include "ordist/generators.hpp"
#include "ordist/io.hpp"
#include "ordist/order.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ordist::cli {

namespace {

// Thrown for violated preconditions; maps to exit 3.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A file path, or failing that a shipped fixture name.
DistanceMatrix load_matrix(const std::string& source) {
  if (std::filesystem::exists(source)) return io::read_matrix_file(source);
  if (auto d = fixtures::matrix_fixture(source)) return *d;
  throw io::ParseError(0, "no such file or fixture: " + source);
}

WeightedSplitSystem load_splits(const std::string& source) {
  if (std::filesystem::exists(source)) return io::read_splits_file(source);
  if (auto s = fixtures::split_fixture(source)) return *s;
  throw io::ParseError(0, "no such file or fixture: " + source);
}

Rational parse_param(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw io::ParseError(0, std::string("bad value for ") + name + ": " + text);
  }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string render(const GroundSet& ground, const Split& s) { return s.to_string(ground); }

std::string render(const GroundSet& ground, const CircularOrdering& theta) {
  const auto canonical = theta.canonical();
  std::string out;
  for (Element e : canonical.sequence()) out += (out.empty() ? "" : " ") + ground.label(e);
  return out;
}

void emit_matrix(std::ostream& report, const DistanceMatrix& d, const std::string& output) {
  if (output.empty()) {
    io::write_matrix(report, d);
    return;
  }
  std::ofstream out(output);
  if (!out) throw io::ParseError(0, "cannot write " + output);
  io::write_matrix(out, d);
  report << "written: " << output << '\n';
}

void emit_splits(std::ostream& report, const WeightedSplitSystem& ws, const std::string& output) {
  if (output.empty()) {
    io::write_splits(report, ws);
    return;
  }
  std::ofstream out(output);
  if (!out) throw io::ParseError(0, "cannot write " + output);
  io::write_splits(out, ws);
  report << "written: " << output << '\n';
}

struct Options {
  std::string input, splits, output, p = "2", q = "1", algo = "eq1", kind;
  bool witness = false, strict = false;
  std::size_t n = 0, trials = 0;
  std::uint64_t seed = 0;
};

int cmd_order(const Options& o, std::ostream& report) {
  const auto d = load_matrix(o.input);
  const Rational p = parse_param(o.p, "-p"), q = parse_param(o.q, "-q");
  const OrderParams params = [&] {
    try {
      return OrderParams(p, q);
    } catch (const std::invalid_argument& e) {
      throw io::ParseError(0, e.what());
    }
  }();
  DistanceMatrix result = d;
  if (o.algo == "eq1") {
    result = order_distance_eq1(d, params);
  } else if (o.algo == "kendall") {
    result = order_distance_kendall(d, params);
  } else {
    if (q * 2 != p) throw PreconditionError("the circular engine needs q = p/2");
    try {
      result = order_distance_circular(d, p);
    } catch (const std::invalid_argument& e) {
      throw PreconditionError(e.what());
    }
  }
  emit_matrix(report, result, o.output);
  return kOk;
}

int cmd_midpath(const Options& o, std::ostream& report) {
  const auto d = load_matrix(o.input);
  const auto& ground = d.ground();
  const auto m = midpath_split_system(d);
  const std::size_t n = d.size();
  report << "midpath_splits: " << m.x_splits.size() << '\n';
  report << "bound: " << n * (n - 1) << '\n';
  for (const auto& [s, c] : m.x_splits) report << "x " << render(ground, s) << " : " << c << '\n';
  report << "e_splits: " << m.e_splits.size() << '\n';
  for (const auto& [s, c] : m.e_splits) report << "e " << render(ground, s) << " : " << c << '\n';
  const auto system = m.midpath_splits();
  const auto bad = first_incompatible_pair(system);
  report << "compatible: " << yes_no(!bad) << '\n';
  if (bad)
    report << "incompatible_pair: " << render(ground, bad->first) << " , "
           << render(ground, bad->second) << '\n';
  if (o.witness) {
    if (const auto w = six_point_witness(d)) {
      report << "witness: a=" << ground.label(w->a) << " b=" << ground.label(w->b)
             << " s=" << ground.label(w->s) << " t=" << ground.label(w->t)
             << " x=" << ground.label(w->x) << " y=" << ground.label(w->y)
             << " condition=" << w->condition << " branch=" << w->branch << '\n';
    } else {
      report << "witness: none\n";
    }
  }
  return kOk;
}

int cmd_check(const Options& o, std::ostream& report) {
  const auto ws = load_splits(o.splits);
  const auto system = ws.splits();
  const auto& ground = system.ground();
  bool verdict = true;
  if (o.kind == "compat") {
    const auto bad = first_incompatible_pair(system);
    verdict = !bad;
    report << "compatible: " << yes_no(verdict) << '\n';
    if (bad)
      report << "incompatible_pair: " << render(ground, bad->first) << " , "
             << render(ground, bad->second) << '\n';
  } else if (o.kind == "circular") {
    if (system.empty()) throw PreconditionError("empty split system");
    const auto theta = is_circular_split_system(system);
    verdict = theta.has_value();
    report << "circular: " << yes_no(verdict) << '\n';
    if (theta) report << "ordering: " << render(ground, *theta) << '\n';
  } else if (o.kind == "flat") {
    verdict = is_maximum_flat(system);
    report << "maximum_flat: " << yes_no(verdict) << '\n';
  } else if (o.kind == "independent") {
    const auto rank = split_rank(system);
    verdict = rank == system.size();
    report << "independent: " << yes_no(verdict) << '\n' << "rank: " << rank << '\n'
           << "splits: " << system.size() << '\n';
  } else if (o.kind == "closed") {
    if (ground.size() < 4) throw PreconditionError("closedness needs at least 4 elements");
    const auto bad = is_closed(system);
    verdict = !bad;
    report << "closed: " << yes_no(verdict) << '\n';
    if (bad)
      report << "violating_pair: " << render(ground, bad->first) << " , "
             << render(ground, bad->second) << '\n';
  } else {  // pairsep
    if (ground.size() < 2) throw PreconditionError("pairwise separation needs 2 elements");
    const auto bad = pairwise_separation_check(system);
    verdict = !bad;
    report << "pairwise_separation: " << yes_no(verdict) << '\n';
    if (bad)
      report << "violating_elements: " << ground.label(bad->first) << ' '
             << ground.label(bad->second) << '\n';
  }
  return (!verdict && o.strict) ? kCheckFailed : kOk;
}

int cmd_decompose(const Options& o, std::ostream& report) {
  const auto d = load_matrix(o.input);
  const auto system = load_splits(o.splits).splits();
  if (!(d.ground() == system.ground()))
    throw PreconditionError("matrix and split system use different labels");
  if (!is_linearly_independent(system))
    throw PreconditionError("split system is not linearly independent");
  const auto weights = express_in_basis(d, system);
  if (!weights) {
    report << "result: NOT-IN-SPAN\n";
    return o.strict ? kCheckFailed : kOk;
  }
  bool negative = false;
  for (const auto& [s, w] : *weights) negative |= w < 0;
  report << "result: " << (negative ? "NEGATIVE-WEIGHT" : "OK") << '\n';
  for (const auto& [s, w] : *weights)
    report << render(system.ground(), s) << " : " << to_string(w) << '\n';
  return (negative && o.strict) ? kCheckFailed : kOk;
}

int cmd_orderly(const Options& o, std::ostream& report) {
  const auto system = load_splits(o.splits).splits();
  if (system.empty()) throw PreconditionError("empty split system");
  if (!is_linearly_independent(system))
    throw PreconditionError("split system is not linearly independent");
  const auto verdict = orderly_test(system, o.trials, o.seed);
  if (const auto* none = std::get_if<NoCounterexampleFound>(&verdict)) {
    report << "verdict: no-counterexample\ntrials: " << none->trials << '\n';
    return kOk;
  }
  const auto& c = std::get<CounterexampleFound>(verdict);
  const auto& ground = system.ground();
  report << "verdict: counterexample\nphase: " << c.phase << '\n';
  if (c.phase == 2) report << "trial: " << c.trial << '\n';
  report << "reason: "
         << (c.reason == CounterexampleFound::Reason::NotInSpan ? "NOT-IN-SPAN"
                                                                 : "NEGATIVE-WEIGHT")
         << '\n';
  if (c.pair)
    report << "pair: " << render(ground, c.pair->first) << " , " << render(ground, c.pair->second)
           << '\n';
  if (c.negative_split) report << "negative_split: " << render(ground, *c.negative_split) << '\n';
  report << "weighting:\n";
  io::write_splits(report, c.weighting);
  return o.strict ? kCheckFailed : kOk;
}

int cmd_gen(const Options& o, std::ostream& report) {
  if (o.n < 3) throw PreconditionError("gen needs n >= 3");
  Rng rng(o.seed);
  const auto ground = GroundSet::lettered(o.n);
  if (o.kind == "tree") {
    emit_splits(report, random_binary_tree(ground, 10, rng), o.output);
  } else if (o.kind == "circular") {
    emit_splits(report, random_maximum_circular(ground, 1, 10, rng).system, o.output);
  } else {
    const auto pair = random_allowable_pair(o.n, rng);
    emit_splits(report, WeightedSplitSystem::uniform(allowable_splits(ground, pair), Rational(1)),
                o.output);
  }
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& report) {
  if (o.n < 4) throw PreconditionError("bench needs n >= 4");
  const auto r = bench_engines(o.n, o.seed);
  report << "n: " << r.n << '\n'
         << "eq1_ms: " << r.eq1_ms << '\n'
         << "kendall_ms: " << r.kendall_ms << '\n'
         << "circular_ms: " << r.circular_ms << '\n'
         << "engines_agree: " << yes_no(r.engines_agree) << '\n'
         << "circular_faster_than_eq1: " << yes_no(r.circular_ms < r.eq1_ms) << '\n';
  return r.engines_agree ? kOk : kCheckFailed;
}

}  // namespace

BenchResult bench_engines(std::size_t n, std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  Rng rng(seed);
  const auto instance = random_maximum_circular(GroundSet::numbered(n), 1, 1000, rng);
  const auto d = generate_distance(instance.system);
  const OrderParams params(Rational(2), Rational(1));
  auto time = [](auto&& f) {
    const auto start = clock::now();
    auto value = f();
    const std::chrono::duration<double, std::milli> ms = clock::now() - start;
    return std::pair{std::move(value), ms.count()};
  };
  auto [eq1, eq1_ms] = time([&] { return order_distance_eq1(d, params); });
  auto [kendall, kendall_ms] = time([&] { return order_distance_kendall(d, params); });
  auto [circ, circular_ms] = time([&] { return order_distance_circular(d, Rational(2)); });
  return {n, eq1_ms, kendall_ms, circular_ms, eq1 == kendall && eq1 == circ};
}

CommandOutcome run(const std::vector<std::string>& args) {
  CLI::App app{"Order distances and split-system analysis", "ordist"};
  app.require_subcommand(1);
  Options o;

  auto* order = app.add_subcommand("order", "order distance matrix");
  order->add_option("-i,--input", o.input, "distance matrix file or fixture")->required();
  order->add_option("-p", o.p, "p > 0");
  order->add_option("-q", o.q, "q >= p/2");
  order->add_option("--algo", o.algo)->check(CLI::IsMember({"eq1", "kendall", "circular"}));
  order->add_option("-o,--output", o.output);

  auto* midpath = app.add_subcommand("midpath", "midpath split system");
  midpath->add_option("-i,--input", o.input)->required();
  midpath->add_flag("--witness", o.witness, "search for a six-point witness");

  auto* check = app.add_subcommand("check", "split-system predicates");
  check->add_option("kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"compat", "circular", "flat", "independent", "closed", "pairsep"}));
  check->add_option("-s,--splits", o.splits)->required();
  check->add_flag("--strict", o.strict, "exit 1 when the verdict is false");

  auto* decompose = app.add_subcommand("decompose", "express a matrix over a split basis");
  decompose->add_option("-i,--input", o.input)->required();
  decompose->add_option("-s,--splits", o.splits)->required();
  decompose->add_flag("--strict", o.strict);

  auto* orderly = app.add_subcommand("orderly", "search for a non-orderly weighting");
  orderly->add_option("-s,--splits", o.splits)->required();
  orderly->add_option("--trials", o.trials)->required();
  orderly->add_option("--seed", o.seed)->required();
  orderly->add_flag("--strict", o.strict);

  auto* gen = app.add_subcommand("gen", "random split systems");
  gen->add_option("kind", o.kind)->required()->check(CLI::IsMember({"tree", "circular", "flat"}));
  gen->add_option("-n", o.n)->required();
  gen->add_option("--seed", o.seed)->required();
  gen->add_option("-o,--output", o.output);

  auto* bench = app.add_subcommand("bench", "time the order-distance engines");
  bench->add_option("-n", o.n)->required();
  bench->add_option("--seed", o.seed)->required();

  CommandOutcome outcome;
  std::ostringstream report, diagnostics;
  std::vector<std::string> argv_storage{"ordist"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, report, diagnostics);
    outcome.exit_code = code == 0 ? kOk : kParseError;
    outcome.report = report.str();
    outcome.diagnostics = diagnostics.str();
    return outcome;
  }

  try {
    if (order->parsed()) outcome.exit_code = cmd_order(o, report);
    else if (midpath->parsed()) outcome.exit_code = cmd_midpath(o, report);
    else if (check->parsed()) outcome.exit_code = cmd_check(o, report);
    else if (decompose->parsed()) outcome.exit_code = cmd_decompose(o, report);
    else if (orderly->parsed()) outcome.exit_code = cmd_orderly(o, report);
    else if (gen->parsed()) outcome.exit_code = cmd_gen(o, report);
    else outcome.exit_code = cmd_bench(o, report);
  } catch (const io::ParseError& e) {
    diagnostics << "error: " << e.what() << '\n';
    outcome.exit_code = kParseError;
  } catch (const PreconditionError& e) {
    diagnostics << "error: " << e.what() << '\n';
    outcome.exit_code = kPrecondition;
  } catch (const std::invalid_argument& e) {
    diagnostics << "error: " << e.what() << '\n';
    outcome.exit_code = kPrecondition;
  }
  outcome.report = report.str();
  outcome.diagnostics = diagnostics.str();
  return outcome;
}

}  // namespace ordist::cli
