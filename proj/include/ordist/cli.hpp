#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ordist::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kParseError = 2, kPrecondition = 3 };

struct CommandOutcome {
  int exit_code = kOk;
  /// `key: value` lines, or a matrix / split system in the text formats.
  std::string report;
  /// Errors and warnings meant for stderr.
  std::string diagnostics;
};

/// argv without the program name.
CommandOutcome run(const std::vector<std::string>& args);

struct BenchResult {
  std::size_t n;
  double eq1_ms;
  double kendall_ms;
  double circular_ms;
  bool engines_agree;
};
/// Times the three engines once each on a random weighted maximum circular system.
BenchResult bench_engines(std::size_t n, std::uint64_t seed);

}  // namespace ordist::cli
