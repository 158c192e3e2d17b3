#include "ordist/io.hpp"

#include <boost/algorithm/string.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ordist::io {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line, trimmed.
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      boost::algorithm::trim(raw);
      if (raw.empty() || raw.front() == '#') continue;
      out = std::move(raw);
      return true;
    }
    return false;
  }
  std::string require(const char* what) {
    std::string s;
    if (!next(s)) throw ParseError(0, std::string("unexpected end of input, expected ") + what);
    return s;
  }
  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  for (std::string t; ss >> t;) out.push_back(std::move(t));
  return out;
}

std::size_t parse_count(const std::string& text, std::size_t line) {
  std::size_t pos = 0;
  unsigned long long n = 0;
  try {
    n = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.front() == '-' || n == 0)
    throw ParseError(line, "expected a positive element count, got '" + text + "'");
  return n;
}

Rational parse_value(const std::string& text, std::size_t line) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw ParseError(line, "malformed number '" + text + "'");
  }
}

template <class F>
auto rethrow_at(std::size_t line, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return in;
}

ElementSet parse_side(const GroundSet& ground, std::string text, std::size_t line) {
  boost::algorithm::trim(text);
  if (text.empty()) throw ParseError(line, "empty split side");
  std::vector<std::string> labels;
  boost::algorithm::split(labels, text, boost::is_any_of(","));
  ElementSet set(ground.size());
  for (auto& label : labels) {
    boost::algorithm::trim(label);
    const auto e = ground.find(label);
    if (!e) throw ParseError(line, "unknown label '" + label + "'");
    if (set.test(*e)) throw ParseError(line, "label '" + label + "' repeated");
    set.set(*e);
  }
  return set;
}

std::string render_side(const GroundSet& ground, const ElementSet& set) {
  std::string out;
  for (auto e = set.find_first(); e != ElementSet::npos; e = set.find_next(e)) {
    if (!out.empty()) out += ',';
    out += ground.label(e);
  }
  return out;
}

}  // namespace

DistanceMatrix read_matrix(std::istream& in) {
  LineReader reader(in);
  const std::size_t n = parse_count(reader.require("element count"), reader.line());
  std::vector<std::string> labels;
  std::vector<Rational> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = tokens(reader.require("matrix row"));
    if (row.size() != n + 1)
      throw ParseError(reader.line(), "expected a label and " + std::to_string(n) + " values");
    labels.push_back(row[0]);
    for (std::size_t j = 1; j <= n; ++j) entries.push_back(parse_value(row[j], reader.line()));
  }
  std::string extra;
  if (reader.next(extra)) throw ParseError(reader.line(), "unexpected trailing content");
  return rethrow_at(reader.line(), [&] {
    GroundSet ground(std::move(labels));
    return DistanceMatrix(std::move(ground), std::move(entries));
  });
}

DistanceMatrix read_matrix_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const DistanceMatrix& d) {
  out << d.size() << '\n';
  for (Element i = 0; i < d.size(); ++i) {
    out << d.ground().label(i);
    for (Element j = 0; j < d.size(); ++j) out << ' ' << to_string(d(i, j));
    out << '\n';
  }
}

WeightedSplitSystem read_splits(std::istream& in) {
  LineReader reader(in);
  const std::size_t n = parse_count(reader.require("element count"), reader.line());
  auto labels = tokens(reader.require("labels"));
  if (labels.size() != n)
    throw ParseError(reader.line(), "expected " + std::to_string(n) + " labels");
  const GroundSet ground = rethrow_at(reader.line(), [&] { return GroundSet(labels); });
  WeightedSplitSystem ws(ground);
  for (std::string line; reader.next(line);) {
    const std::size_t at = reader.line();
    Rational weight(1);
    if (const auto colon = line.find(':'); colon != std::string::npos) {
      auto w = line.substr(colon + 1);
      boost::algorithm::trim(w);
      weight = parse_value(w, at);
      if (weight < 0) throw ParseError(at, "negative split weight");
      line.resize(colon);
    }
    const auto bar = line.find('|');
    if (bar == std::string::npos) throw ParseError(at, "split needs the form 'A | B'");
    const ElementSet a = parse_side(ground, line.substr(0, bar), at);
    const ElementSet b = parse_side(ground, line.substr(bar + 1), at);
    if (a.intersects(b)) throw ParseError(at, "split sides overlap");
    if (!(a | b).all()) throw ParseError(at, "split sides do not cover all labels");
    const Split s(a);
    if (ws.weights().contains(s)) throw ParseError(at, "split listed twice");
    ws.add(s, weight);
  }
  return ws;
}

WeightedSplitSystem read_splits_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_splits(in);
}

void write_splits(std::ostream& out, const WeightedSplitSystem& ws) {
  const auto& ground = ws.ground();
  out << ground.size() << '\n';
  for (std::size_t i = 0; i < ground.size(); ++i) out << (i ? " " : "") << ground.label(i);
  out << '\n';
  for (const auto& [s, w] : ws.weights())
    out << render_side(ground, s.side()) << " | " << render_side(ground, s.other_side()) << " : "
        << to_string(w) << '\n';
}

void write_splits(std::ostream& out, const SplitSystem& s) {
  write_splits(out, WeightedSplitSystem::uniform(s, Rational(1)));
}

}  // namespace ordist::io
