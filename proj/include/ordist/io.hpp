#pragma once

#include "ordist/distance_matrix.hpp"
#include "ordist/split_system.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

namespace ordist::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  /// 1-based line of the offending input, 0 if at end of input.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// "# comment" lines and blank lines are skipped. Then `n`, then n rows `label v1 .. vn`.
DistanceMatrix read_matrix(std::istream& in);
DistanceMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix(std::ostream& out, const DistanceMatrix& d);

/// `n`, a line of n labels, then one split per line: `a,b | c,d,e : 3/2` (weight optional,
/// default 1). Repeated splits are rejected.
WeightedSplitSystem read_splits(std::istream& in);
WeightedSplitSystem read_splits_file(const std::filesystem::path& path);
/// Writes every split including zero-weight ones; the part without the first label first.
void write_splits(std::ostream& out, const WeightedSplitSystem& ws);
void write_splits(std::ostream& out, const SplitSystem& s);

}  // namespace ordist::io
