#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>

#include "lcsenum/enumerator.hpp"
#include "lcsenum/errors.hpp"
#include "lcsenum/match_view.hpp"
#include "lcsenum/reference_oracle.hpp"

namespace lcsenum::cli {

namespace {

constexpr std::uint64_t kDefaultBenchLimit = 50;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path, bool trim_newline) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading '" + path + "'");
  if (trim_newline && !bytes.empty() && bytes.back() == '\n') bytes.pop_back();
  return bytes;
}

void write_record(std::ostream& out, Format format, const MatchView& view,
                  const PositionSequence& p, std::uint64_t ordinal) {
  switch (format) {
    case Format::kPositions:
      out << p.to_string() << '\n';
      break;
    case Format::kStrings:
      out << render(view, p) << '\n';
      break;
    case Format::kJsonLines: {
      nlohmann::json j;
      j["ordinal"] = ordinal;
      j["positions"] = p.vector();
      j["string"] = render(view, p);
      out << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
      break;
    }
  }
}

int run_inputs(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string x;
  std::string y;
  if (config.from_files) {
    x = read_file(config.inputs[0], config.trim_trailing_newline);
    y = read_file(config.inputs[1], config.trim_trailing_newline);
  } else {
    x = config.inputs[0];
    y = config.inputs[1];
  }
  const StringView view(x, y);

  // Refuse oversized checks before any output is produced.
  if (config.check &&
      (x.size() > oracle::kDefaultMaxLength || y.size() > oracle::kDefaultMaxLength)) {
    err << "error: --check supports inputs up to " << oracle::kDefaultMaxLength
        << " characters\n";
    return kExitUsage;
  }

  LcsEnumerator enumerator(view);
  std::vector<PositionSequence> seen;
  std::uint64_t count = 0;
  std::size_t lcs_len = 0;
  while (!config.limit || count < *config.limit) {
    auto p = enumerator.next();
    if (!p) break;
    ++count;
    lcs_len = p->size();
    write_record(out, config.format, view, *p, count);
    if (config.check) seen.push_back(std::move(*p));
  }
  out.flush();
  if (!out) throw IoError("error writing output");

  if (config.stats) {
    const auto c = enumerator.counters();
    const double mean =
        c.gaps == 0 ? 0.0 : static_cast<double>(c.total_eq_queries) / static_cast<double>(c.gaps);
    err << "count: " << count << '\n'
        << "max_delay_queries: " << c.max_delay_queries << '\n'
        << "mean_delay_queries: " << mean << '\n'
        << "peak_aux_cells: " << c.peak_aux_cells << '\n'
        << "lcs_length: " << lcs_len << '\n'
        << "len_x: " << x.size() << '\n'
        << "len_y: " << y.size() << '\n';
  }

  if (config.check) {
    auto expected = oracle::all_lcs_position_sequences(view);
    if (config.limit && expected.size() > *config.limit) expected.resize(*config.limit);
    if (expected == seen) {
      err << "check: PASS (" << seen.size() << " sequences)\n";
    } else {
      err << "check: FAIL (enumerator produced " << seen.size() << ", oracle expects "
          << expected.size() << ")\n";
      return kExitCheckFailed;
    }
  }
  return kExitOk;
}

int run_bench(const RunConfig& config, const BenchConfig& bench, std::ostream& out) {
  const std::uint64_t limit = config.limit.value_or(kDefaultBenchLimit);
  out << "length\talphabet\treps\tmean_L\toutputs\tmax_delay\tdelay_per_n2\tpeak_cells\n";
  for (std::size_t n : bench.lengths) {
    std::uint64_t outputs = 0;
    std::uint64_t max_delay = 0;
    std::size_t peak = 0;
    double sum_l = 0.0;
    for (std::size_t rep = 0; rep < bench.repetitions; ++rep) {
      const std::uint64_t stream = (static_cast<std::uint64_t>(n) << 24) | (rep << 1);
      const std::string x = random_string(bench.seed, n, bench.alphabet, stream);
      const std::string y = random_string(bench.seed, n, bench.alphabet, stream | 1);
      const StringView view(x, y);
      LcsEnumerator e(view);
      std::uint64_t emitted = 0;
      while (emitted < limit) {
        auto p = e.next();
        if (!p) break;
        if (emitted == 0) sum_l += static_cast<double>(p->size());
        ++emitted;
      }
      const auto c = e.counters();
      outputs += emitted;
      max_delay = std::max(max_delay, c.max_delay_queries);
      peak = std::max(peak, c.peak_aux_cells);
    }
    const double reps = static_cast<double>(std::max<std::size_t>(bench.repetitions, 1));
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    out << n << '\t' << bench.alphabet << '\t' << bench.repetitions << '\t' << sum_l / reps
        << '\t' << outputs << '\t' << max_delay << '\t' << static_cast<double>(max_delay) / n2
        << '\t' << peak << '\n';
  }
  return kExitOk;
}

}  // namespace

std::string random_string(std::uint64_t seed, std::size_t length, std::size_t alphabet,
                          std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 rng(seq);
  std::string s(length, '\0');
  for (auto& c : s) c = static_cast<char>(static_cast<unsigned char>(rng() % alphabet));
  return s;
}

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate all distinct longest common subsequences of two strings", "lcs-enum"};
  RunConfig config;
  BenchConfig bench;
  bool bench_mode = false;
  std::uint64_t limit = 0;

  const std::map<std::string, Format> formats{{"positions", Format::kPositions},
                                              {"strings", Format::kStrings},
                                              {"json-lines", Format::kJsonLines}};

  app.add_option("inputs", config.inputs, "X and Y (or two file paths with --files)")
      ->expected(0, 2);
  app.add_flag("--files", config.from_files, "Treat the two inputs as file paths");
  app.add_flag("--trim-trailing-newline,!--no-trim-trailing-newline",
               config.trim_trailing_newline,
               "Strip one trailing newline from file inputs (default on)");
  app.add_option("-f,--format", config.format, "positions | strings | json-lines")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  auto* limit_opt =
      app.add_option("-n,--limit", limit, "Stop after this many outputs")->check(CLI::PositiveNumber);
  app.add_flag("--stats", config.stats, "Print delay and space statistics to stderr");
  app.add_flag("--check", config.check, "Cross-check against the quadratic-space oracle");

  app.add_flag("--bench", bench_mode, "Run a seeded random benchmark sweep");
  app.add_option("--lengths", bench.lengths, "Bench string lengths")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  app.add_option("--alphabet", bench.alphabet, "Bench alphabet size")->check(CLI::Range(1, 256));
  app.add_option("--reps", bench.repetitions, "Bench repetitions per length");
  app.add_option("--seed", bench.seed, "Bench seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    ParseResult r;
    r.exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    return r;
  }

  ParseResult r;
  r.exit_code = kExitUsage;
  if (*limit_opt) config.limit = limit;
  if (bench_mode) {
    if (!config.inputs.empty() || config.from_files || config.check) {
      err << "error: --bench does not take inputs or --check\n";
      return r;
    }
    if (bench.lengths.empty()) bench.lengths = {64, 128, 256, 512};
    config.bench = bench;
  } else if (config.inputs.size() != 2) {
    err << "error: expected exactly two inputs (X and Y)\n" << app.help();
    return r;
  }
  r.config = std::move(config);
  r.exit_code = kExitOk;
  return r;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.bench) return run_bench(config, *config.bench, out);
    return run_inputs(config, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OracleLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace lcsenum::cli
