#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "intentcheck/harness/bench.hpp"
#include "intentcheck/harness/corpus.hpp"
#include "intentcheck/harness/coverage.hpp"
#include "intentcheck/harness/workspace.hpp"
#include "intentcheck/shacl/loader.hpp"
#include "intentcheck/shacl/report.hpp"
#include "intentcheck/shacl/validator.hpp"
#include "intentcheck/turtle.hpp"

namespace {

using namespace intentcheck;

constexpr int kExitConforms = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

harness::Tier parseTier(const std::string& tier) {
  if (tier == "af") return harness::Tier::Af;
  if (tier == "sparql") return harness::Tier::Sparql;
  throw CLI::ValidationError("--tier must be 'sparql' or 'af'");
}

struct LoadedShapes {
  rdf::Graph ontology;
  shacl::ShapesGraph shapes;
  rdf::PrefixMap prefixes;
};

// Either an explicit file list or the corpus-root layout.
LoadedShapes loadForValidate(const std::string& corpus, const std::vector<std::string>& shapeFiles,
                             const std::vector<std::string>& ontologyFiles,
                             harness::Tier tier) {
  LoadedShapes out;
  if (shapeFiles.empty() && ontologyFiles.empty()) {
    harness::Workspace ws = harness::loadWorkspace(corpus, tier);
    out.ontology = std::move(ws.ontology);
    out.shapes = std::move(ws.shapes);
    out.prefixes = std::move(ws.prefixes);
    return out;
  }
  rdf::PrefixMap shapesPrefixes;
  rdf::Graph shapesGraph;
  for (const std::string& f : shapeFiles)
    harness::loadTurtleFile(f, shapesGraph, shapesPrefixes);
  rdf::PrefixMap ontologyPrefixes;
  for (const std::string& f : ontologyFiles)
    harness::loadTurtleFile(f, out.ontology, ontologyPrefixes);
  out.ontology.freeze();
  out.shapes = shacl::loadShapes(shapesGraph, shapesPrefixes);
  out.prefixes = ontologyPrefixes;
  out.prefixes.merge(shapesPrefixes);
  return out;
}

int cmdValidate(const std::vector<std::string>& dataFiles, const std::string& corpus,
                const std::vector<std::string>& shapeFiles,
                const std::vector<std::string>& ontologyFiles, const std::string& tierName,
                const std::string& format, int jobs) {
  LoadedShapes loaded;
  try {
    loaded = loadForValidate(corpus, shapeFiles, ontologyFiles, parseTier(tierName));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  struct FileOutcome {
    bool usageError = false;
    bool conforms = true;
    std::string output;  // report text or error message
  };
  std::vector<FileOutcome> outcomes(dataFiles.size());

  // Files validate independently; buffered output preserves CLI order.
  auto runOne = [&](std::size_t i) {
    FileOutcome& out = outcomes[i];
    rdf::Graph data;
    rdf::PrefixMap display = loaded.prefixes;
    try {
      auto parsed = rdf::parseTurtle(harness::readTextFile(dataFiles[i]));
      data = std::move(parsed.graph);
      display.merge(parsed.prefixes);
      data.freeze();
      auto report = shacl::validateGraph(data, loaded.shapes, loaded.ontology, &display);
      out.conforms = report.conforms;
      out.output = shacl::serializeReport(
          report, format == "json" ? shacl::ReportFormat::Json : shacl::ReportFormat::Turtle,
          display);
    } catch (const std::exception& e) {
      out.usageError = true;
      out.output = dataFiles[i] + ": " + e.what();
    }
  };

  if (jobs <= 1 || dataFiles.size() <= 1) {
    for (std::size_t i = 0; i < dataFiles.size(); ++i) runOne(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (std::size_t i = next.fetch_add(1); i < dataFiles.size(); i = next.fetch_add(1))
        runOne(i);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  bool anyViolation = false;
  bool anyUsage = false;
  for (std::size_t i = 0; i < dataFiles.size(); ++i) {
    const FileOutcome& out = outcomes[i];
    if (out.usageError) {
      anyUsage = true;
      std::cerr << "error: " << out.output << "\n";
      continue;
    }
    anyViolation |= !out.conforms;
    if (dataFiles.size() > 1) std::cout << "# file: " << dataFiles[i] << "\n";
    std::cout << out.output;
  }
  if (anyUsage) return kExitUsage;
  return anyViolation ? kExitViolations : kExitConforms;
}

int cmdTest(const std::string& corpus, const std::string& tierName, const std::string& module,
            int jobs, const std::string& junitPath) {
  harness::Workspace ws;
  try {
    ws = harness::loadWorkspace(corpus, parseTier(tierName));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  harness::CorpusOptions options;
  options.moduleFilter = module;
  options.jobs = jobs;
  harness::SuiteResult suite = harness::runTestCorpus(ws, options);
  std::cout << suite.summary();

  if (!junitPath.empty()) {
    std::ofstream out(junitPath);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<testsuite name=\"intentcheck\" tests=\"" << suite.files.size() << "\" failures=\""
        << suite.failedCount() << "\">\n";
    for (const auto& f : suite.files) {
      out << "  <testcase classname=\"" << f.testCase.module << "\" name=\""
          << f.testCase.path.filename().string() << "\"";
      if (f.passed) {
        out << "/>\n";
      } else {
        out << "><failure><![CDATA[" << f.detail << "]]></failure></testcase>\n";
      }
    }
    out << "</testsuite>\n";
  }
  return suite.allPassed() ? kExitConforms : kExitViolations;
}

int cmdCoverage(const std::string& corpus, const std::string& tierName,
                const std::string& csvPath) {
  harness::Workspace ws;
  try {
    ws = harness::loadWorkspace(corpus, parseTier(tierName));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  harness::CoverageReport report = harness::generateCoverage(ws);
  std::cout << report.summary();
  if (!csvPath.empty()) {
    std::ofstream out(csvPath);
    out << report.toCsv();
    std::cerr << "wrote " << csvPath << "\n";
  }
  return kExitConforms;
}

int cmdBench(const std::string& corpus, const std::string& tierName, int reps, int warmups,
             const std::string& csvPath) {
  harness::BenchConfig config;
  config.repetitions = reps;
  config.warmups = warmups;
  if (tierName == "both") {
    config.tiers = {harness::Tier::Sparql, harness::Tier::Af};
  } else {
    config.tiers = {parseTier(tierName)};
  }
  harness::BenchResult result;
  try {
    result = harness::runBenchmark(corpus, config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cout << result.summary();
  if (!csvPath.empty()) {
    std::ofstream out(csvPath);
    out << result.toCsv();
    std::cerr << "wrote " << csvPath << "\n";
  }
  return kExitConforms;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SHACL validation engine and conformance toolkit for intent ontologies"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Validate data files against the shapes");
  std::vector<std::string> dataFiles;
  std::string corpus = "fixtures";
  std::vector<std::string> shapeFiles, ontologyFiles;
  std::string tier = "af";
  std::string format = "turtle";
  validate->add_option("data", dataFiles, "Turtle data files")
      ->required()
      ->check(CLI::ExistingFile);
  validate->add_option("--corpus", corpus, "Corpus root providing ontology/ and shapes/");
  validate->add_option("--shapes", shapeFiles, "Explicit shapes files (instead of --corpus)");
  validate->add_option("--ontology", ontologyFiles,
                       "Explicit ontology files (instead of --corpus)");
  validate->add_option("--tier", tier, "Shape tier: sparql or af (default af)");
  validate->add_option("--format", format, "Report format: turtle or json")
      ->check(CLI::IsMember({"turtle", "json"}));
  int validateJobs = 1;
  validate->add_option("--jobs", validateJobs, "Parallel validation workers")
      ->check(CLI::PositiveNumber);

  auto* test = app.add_subcommand("test", "Run the good/bad test corpus");
  std::string testCorpus = "fixtures";
  std::string testTier = "af";
  std::string module;
  int jobs = 1;
  std::string junit;
  test->add_option("--corpus", testCorpus, "Corpus root");
  test->add_option("--tier", testTier, "Shape tier: sparql or af (default af)");
  test->add_option("--module", module, "Run only this module's tests");
  test->add_option("--jobs", jobs, "Parallel validation workers")->check(CLI::PositiveNumber);
  test->add_option("--junit", junit, "Write a JUnit XML summary to this path");

  auto* coverage = app.add_subcommand("coverage", "Vocabulary coverage report");
  std::string covCorpus = "fixtures";
  std::string covTier = "af";
  std::string covCsv = "coverage.csv";
  coverage->add_option("--corpus", covCorpus, "Corpus root");
  coverage->add_option("--tier", covTier, "Shape tier used for coverage");
  coverage->add_option("--csv", covCsv, "CSV output path (empty to skip)");

  auto* bench = app.add_subcommand("bench", "Warmup/repetition validation benchmark");
  std::string benchCorpus = "fixtures";
  std::string benchTier = "both";
  int reps = 6;
  int warmups = 2;
  std::string benchCsv = "bench.csv";
  bench->add_option("--corpus", benchCorpus, "Corpus root");
  bench->add_option("--tier", benchTier, "Tier to measure: sparql, af, or both");
  bench->add_option("--reps", reps, "Measured repetitions per file")->check(CLI::PositiveNumber);
  bench->add_option("--warmups", warmups, "Unmeasured warmup runs per file")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--csv", benchCsv, "CSV output path (empty to skip)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage problems exit 2; --help and --version keep their success code.
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*validate) return cmdValidate(dataFiles, corpus, shapeFiles, ontologyFiles, tier, format,
                                   validateJobs);
    if (*test) return cmdTest(testCorpus, testTier, module, jobs, junit);
    if (*coverage) return cmdCoverage(covCorpus, covTier, covCsv);
    if (*bench) return cmdBench(benchCorpus, benchTier, reps, warmups, benchCsv);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
