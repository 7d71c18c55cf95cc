#include "intentcheck/harness/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "intentcheck/harness/corpus.hpp"
#include "intentcheck/shacl/validator.hpp"
#include "intentcheck/turtle.hpp"

namespace intentcheck::harness {

namespace fs = std::filesystem;

double BenchEntry::meanMs() const {
  if (samplesMs.empty()) return 0;
  double sum = 0;
  for (double s : samplesMs) sum += s;
  return sum / static_cast<double>(samplesMs.size());
}

double BenchEntry::stddevMs() const {
  if (samplesMs.size() < 2) return 0;
  double mean = meanMs();
  double sq = 0;
  for (double s : samplesMs) sq += (s - mean) * (s - mean);
  return std::sqrt(sq / static_cast<double>(samplesMs.size() - 1));
}

namespace {

std::string formatMs(double ms) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

struct ViolationKey {
  std::string focus;
  std::string constraint;
  std::string message;
  bool operator<(const ViolationKey& other) const {
    return std::tie(focus, constraint, message) <
           std::tie(other.focus, other.constraint, other.message);
  }
  bool operator==(const ViolationKey& other) const {
    return focus == other.focus && constraint == other.constraint && message == other.message;
  }
};

std::set<ViolationKey> violationSet(const shacl::ValidationReport& report) {
  std::set<ViolationKey> out;
  for (const auto& r : report.results) {
    out.insert({r.focusNode.toString(),
                r.sourceConstraint ? r.sourceConstraint->toString() : "",
                r.message});
  }
  return out;
}

}  // namespace

std::string BenchResult::toCsv() const {
  std::ostringstream out;
  out << "file,tier,triples,sample,time_ms\n";
  for (const BenchEntry& e : entries) {
    for (std::size_t i = 0; i < e.samplesMs.size(); ++i) {
      out << e.file << "," << tierName(e.tier) << "," << e.triples << "," << (i + 1) << ","
          << formatMs(e.samplesMs[i]) << "\n";
    }
  }
  return out.str();
}

std::string BenchResult::summary() const {
  std::ostringstream out;
  for (const TierStats& t : tierStats) {
    out << "tier " << tierName(t.tier) << ": total " << formatMs(t.totalMs) << " ms, mean/file "
        << formatMs(t.meanPerFileMs) << " ms, std " << formatMs(t.stddevAcrossFilesMs)
        << " ms\n";
  }
  for (const ModuleStats& m : moduleStats) {
    out << "  " << tierName(m.tier) << " " << m.module << ": mean/file "
        << formatMs(m.meanPerFileMs) << " ms over " << m.files << " files\n";
  }
  if (afOverheadPercent) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%+.2f%%", *afOverheadPercent);
    out << "af tier overhead vs sparql tier: " << buf << "\n";
  }
  out << "tier violation sets " << (tiersAgree ? "agree" : "DISAGREE") << "\n";
  for (const std::string& d : tierDisagreements) out << "  " << d << "\n";
  return out.str();
}

BenchResult runBenchmark(const fs::path& root, const BenchConfig& config) {
  BenchResult result;
  rdf::PrefixMap defaults;

  struct ParsedFile {
    std::string rel;
    std::string module;
    rdf::Graph graph;
    rdf::PrefixMap prefixes;
  };

  // Per-file violation sets per tier, for the equivalence check.
  std::map<std::string, std::map<std::string, std::set<ViolationKey>>> violations;

  for (Tier tier : config.tiers) {
    Workspace ws = loadWorkspace(root, tier);
    std::vector<TestCase> cases = discoverTestCases(root, "", ws.prefixes);

    // Parsing happens before any timing starts.
    std::vector<ParsedFile> files;
    for (const TestCase& tc : cases) {
      ParsedFile pf;
      pf.rel = fs::relative(tc.path, root).generic_string();
      pf.module = tc.module;
      try {
        auto parsed = rdf::parseTurtle(readTextFile(tc.path));
        pf.graph = std::move(parsed.graph);
        pf.prefixes = std::move(parsed.prefixes);
      } catch (const std::exception&) {
        continue;  // benchmark only well-formed corpus files
      }
      pf.graph.freeze();
      files.push_back(std::move(pf));
    }

    TierStats stats;
    stats.tier = tier;
    std::map<std::string, std::pair<double, int>> moduleAccum;
    std::vector<double> fileMeans;

    for (const ParsedFile& pf : files) {
      BenchEntry entry;
      entry.file = pf.rel;
      entry.module = pf.module;
      entry.tier = tier;
      entry.triples = pf.graph.size();

      rdf::PrefixMap display = ws.prefixes;
      display.merge(pf.prefixes);

      shacl::ValidationReport report;
      for (int i = 0; i < config.warmups + config.repetitions; ++i) {
        auto start = std::chrono::steady_clock::now();
        report = shacl::validateGraph(pf.graph, ws.shapes, ws.ontology, &display);
        auto end = std::chrono::steady_clock::now();
        if (i < config.warmups) continue;
        double us = static_cast<double>(
            std::chrono::duration_cast<std::chrono::microseconds>(end - start).count());
        entry.samplesMs.push_back(us / 1000.0);
      }
      violations[pf.rel][tierName(tier)] = violationSet(report);

      double mean = entry.meanMs();
      fileMeans.push_back(mean);
      stats.totalMs += mean;
      auto& acc = moduleAccum[pf.module];
      acc.first += mean;
      acc.second += 1;
      result.entries.push_back(std::move(entry));
    }

    if (!fileMeans.empty()) {
      stats.meanPerFileMs = stats.totalMs / static_cast<double>(fileMeans.size());
      double sq = 0;
      for (double m : fileMeans) sq += (m - stats.meanPerFileMs) * (m - stats.meanPerFileMs);
      stats.stddevAcrossFilesMs =
          fileMeans.size() > 1 ? std::sqrt(sq / static_cast<double>(fileMeans.size() - 1)) : 0;
    }
    result.tierStats.push_back(stats);

    for (const auto& [module, acc] : moduleAccum) {
      ModuleStats ms;
      ms.module = module;
      ms.tier = tier;
      ms.files = acc.second;
      ms.meanPerFileMs = acc.second > 0 ? acc.first / acc.second : 0;
      result.moduleStats.push_back(std::move(ms));
    }
  }

  // Tier-equivalence: identical violation sets per file.
  if (config.tiers.size() >= 2) {
    for (const auto& [file, perTier] : violations) {
      if (perTier.size() < 2) continue;
      auto first = perTier.begin();
      for (auto it = std::next(first); it != perTier.end(); ++it) {
        if (it->second != first->second) {
          result.tiersAgree = false;
          result.tierDisagreements.push_back(file + ": " + first->first + " vs " + it->first);
        }
      }
    }
    const TierStats* sparql = nullptr;
    const TierStats* af = nullptr;
    for (const TierStats& t : result.tierStats) {
      if (t.tier == Tier::Sparql) sparql = &t;
      if (t.tier == Tier::Af) af = &t;
    }
    if (sparql && af && sparql->meanPerFileMs > 0) {
      result.afOverheadPercent =
          (af->meanPerFileMs - sparql->meanPerFileMs) / sparql->meanPerFileMs * 100.0;
    }
  }
  return result;
}

}  // namespace intentcheck::harness
