#pragma once

#include <string>
#include <vector>

#include "intentcheck/harness/workspace.hpp"

namespace intentcheck::harness {

struct BenchConfig {
  int warmups = 2;
  int repetitions = 6;
  std::vector<Tier> tiers = {Tier::Sparql, Tier::Af};
};

/// Timing samples for one (file, tier) pair; warmup runs are not recorded.
struct BenchEntry {
  std::string file;  // path relative to the corpus root
  std::string module;
  Tier tier = Tier::Af;
  std::size_t triples = 0;
  std::vector<double> samplesMs;  // exactly `repetitions` entries

  double meanMs() const;
  double stddevMs() const;
};

struct TierStats {
  Tier tier = Tier::Af;
  double totalMs = 0;
  double meanPerFileMs = 0;
  double stddevAcrossFilesMs = 0;
};

struct ModuleStats {
  std::string module;
  Tier tier = Tier::Af;
  double meanPerFileMs = 0;
  int files = 0;
};

struct BenchResult {
  std::vector<BenchEntry> entries;
  std::vector<TierStats> tierStats;
  std::vector<ModuleStats> moduleStats;
  /// (meanAf - meanSparql) / meanSparql * 100; set when both tiers ran.
  std::optional<double> afOverheadPercent;
  /// Identical (focus, constraint, message) violation sets across tiers.
  bool tiersAgree = true;
  std::vector<std::string> tierDisagreements;

  /// Long-format CSV: file,tier,triples,sample,time_ms, one row per
  /// measured repetition.
  std::string toCsv() const;
  std::string summary() const;
};

/// Validation-only internal timing: files are parsed before the clock
/// starts, each file is validated `warmups` unrecorded plus `repetitions`
/// recorded times. Strictly sequential and single-threaded.
BenchResult runBenchmark(const std::filesystem::path& root, const BenchConfig& config);

}  // namespace intentcheck::harness
