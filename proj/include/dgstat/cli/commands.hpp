#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "dgstat/engine.hpp"

namespace dgstat::cli {

enum ExitCode : int { kExitOk = 0, kExitAssertion = 1, kExitInput = 2 };

/// The JSON object printed for a `?` query and by `stats`.
nlohmann::ordered_json statistics_json(const Statistics& stats);

/// Recomputes every statistic of `engine` by brute force and returns one
/// message per disagreement. Throws oracle::SizeLimitError for graphs
/// above the oracle size limit.
std::vector<std::string> verify_against_oracle(const Engine& engine);

struct StatsOptions {
  bool weighted = false;
};
int cmd_stats(std::istream& in, std::ostream& out, std::ostream& err,
              const StatsOptions& options = {});

struct StreamOptions {
  bool lenient = false;
  bool census = false;
  bool weighted = false;
  std::uint32_t colors = 0;
  bool verify = false;
};
int cmd_stream(std::istream& in, std::ostream& out, std::ostream& err,
               const StreamOptions& options = {});

struct SynthOptions {
  std::string model;  // ba | split | clique | gnp
  std::uint64_t n = 0;
  std::uint64_t attach = 3;
  std::uint64_t h = 0;
  std::uint64_t c = 0;
  double p = 0.1;
  std::uint64_t seed = 1;
};
int cmd_synth(const SynthOptions& options, std::ostream& out, std::ostream& err);

int cmd_hscaling(const std::filesystem::path& dir, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::string model = "ba";  // ba | gnp
  std::uint64_t n = 10000;
  std::uint64_t attach = 3;
  double p = 0.01;
  std::uint64_t seed = 1;
  /// Edge insertions to replay from the generated graph; 0 replays all.
  /// A vertex is inserted just before its first edge.
  std::uint64_t ops = 0;
  /// Random edge toggles (delete an existing edge or insert a missing one)
  /// after the build phase.
  std::uint64_t toggles = 0;
  bool census = true;
};

struct BenchReport {
  std::uint64_t updates = 0;
  double wall_seconds = 0.0;
  std::size_t h = 0;
  std::size_t max_core = 0;
  std::uint64_t c3 = 0;
  std::uint64_t probes = 0;
  std::uint64_t max_probes_per_update = 0;
  std::uint64_t core_additions = 0;
  std::uint64_t core_removals = 0;
  double harmonic_sum = 0.0;
  std::size_t path_cells = 0;
  std::uint64_t rebuild_touches = 0;

  double mean_us() const { return updates == 0 ? 0.0 : wall_seconds * 1e6 / updates; }
  double churn_ratio() const {
    return harmonic_sum == 0.0 ? 0.0 : (core_additions + core_removals) / harmonic_sum;
  }
};

BenchReport run_bench(const BenchOptions& options);
nlohmann::ordered_json bench_json(const BenchOptions& options, const BenchReport& report);
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

}  // namespace dgstat::cli
