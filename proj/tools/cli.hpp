#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lcsenum::cli {

enum class Format { kPositions, kStrings, kJsonLines };

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,
  kExitCheckFailed = 3,
};

struct BenchConfig {
  std::vector<std::size_t> lengths;
  std::size_t alphabet = 4;
  std::size_t repetitions = 20;
  std::uint64_t seed = 1;
};

struct RunConfig {
  // Either two inline strings, or two file paths when from_files is set.
  std::vector<std::string> inputs;
  bool from_files = false;
  bool trim_trailing_newline = true;
  Format format = Format::kPositions;
  std::optional<std::uint64_t> limit;
  bool stats = false;
  bool check = false;
  std::optional<BenchConfig> bench;
};

// Parses argv into a RunConfig. On --help or a parse error, writes to out/err
// and returns the exit code to use instead.
struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;
};
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Executes a validated config. Results go to out, stats and diagnostics to
// err. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Seeded random string over the first `alphabet` byte values.
std::string random_string(std::uint64_t seed, std::size_t length, std::size_t alphabet,
                          std::uint64_t stream);

}  // namespace lcsenum::cli
