// Acceptance suite: executes every acceptance criterion at its stated
// tolerance and prints one pass/fail line per criterion.
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "generators.hpp"
#include "intentcheck/harness/bench.hpp"
#include "intentcheck/harness/corpus.hpp"
#include "intentcheck/harness/coverage.hpp"
#include "intentcheck/harness/workspace.hpp"
#include "intentcheck/isomorphism.hpp"
#include "intentcheck/shacl/report.hpp"
#include "intentcheck/shacl/validator.hpp"
#include "intentcheck/sparql/eval.hpp"
#include "intentcheck/tio/catalog.hpp"
#include "intentcheck/turtle.hpp"

using namespace intentcheck;
namespace fs = std::filesystem;
using rdf::Graph;
using rdf::Term;

namespace {

const fs::path kFixtures = INTENTCHECK_FIXTURES_DIR;
const std::string kCliPath = INTENTCHECK_CLI_PATH;

int g_failures = 0;
std::vector<std::string> g_notes;

void criterion(int number, const std::string& description, const std::function<void()>& body) {
  g_notes.clear();
  bool ok = true;
  std::string error;
  try {
    body();
    ok = g_notes.empty();
  } catch (const std::exception& e) {
    ok = false;
    error = e.what();
  }
  if (ok) {
    std::printf("PASS  criterion %d: %s\n", number, description.c_str());
  } else {
    ++g_failures;
    std::printf("FAIL  criterion %d: %s\n", number, description.c_str());
    for (const std::string& note : g_notes) std::printf("      - %s\n", note.c_str());
    if (!error.empty()) std::printf("      - exception: %s\n", error.c_str());
  }
}

void require(bool condition, const std::string& note) {
  if (!condition) g_notes.push_back(note);
}

Graph parseFile(const fs::path& path, rdf::PrefixMap* prefixes = nullptr) {
  auto parsed = rdf::parseTurtle(harness::readTextFile(path));
  if (prefixes) prefixes->merge(parsed.prefixes);
  parsed.graph.freeze();
  return std::move(parsed.graph);
}

struct ResultKey {
  std::string focus, constraint, message;
  bool operator<(const ResultKey& o) const {
    return std::tie(focus, constraint, message) < std::tie(o.focus, o.constraint, o.message);
  }
  bool operator==(const ResultKey& o) const {
    return focus == o.focus && constraint == o.constraint && message == o.message;
  }
};

std::set<ResultKey> resultKeys(const shacl::ValidationReport& report) {
  std::set<ResultKey> keys;
  for (const auto& r : report.results) {
    keys.insert({r.focusNode.toString(),
                 r.sourceConstraint ? r.sourceConstraint->toString() : "", r.message});
  }
  return keys;
}

// --- criterion 1: paper-example reproduction --------------------------------

void checkCascadeReproduction(const harness::Workspace& ws) {
  auto start = std::chrono::steady_clock::now();

  rdf::PrefixMap goodPrefixes = ws.prefixes;
  Graph good = parseFile(kFixtures / "tests/IntentCommonModel/good/icm-good-video-intent.ttl",
                         &goodPrefixes);
  auto goodReport = shacl::validateGraph(good, ws.shapes, ws.ontology, &goodPrefixes);
  require(goodReport.conforms, "intent fixture must conform");

  rdf::PrefixMap badPrefixes = ws.prefixes;
  Graph bad = parseFile(
      kFixtures / "tests/QuantityOntology/bad/quan-bad-argtype-broken-chain.ttl", &badPrefixes);
  auto badReport = shacl::validateGraph(bad, ws.shapes, ws.ontology, &badPrefixes);

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  require(!badReport.conforms, "broken variant must not conform");
  require(badReport.results.size() == 2,
          "expected exactly two violations, got " + std::to_string(badReport.results.size()));
  const Term argType = Term::iri(tio::ns::kRoot + "FunctionUsageArgumentTypeObjectConstraint");
  std::set<std::string> messages;
  for (const auto& r : badReport.results) {
    require(r.severity == shacl::Severity::Violation, "severity must be Violation");
    require(r.sourceConstraint && *r.sourceConstraint == argType,
            "sourceConstraint must be the argument-type component");
    messages.insert(r.message);
  }
  require(messages.count("Function met:lastValue expects met:Metric.") == 1,
          "missing the met:lastValue message");
  require(messages.count("Function quan:atLeast expects quan:Quantity.") == 1,
          "missing the quan:atLeast message");
  require(elapsed < 1000, "runtime " + std::to_string(elapsed) + " ms >= 1 s");

  // The frozen golden report matches byte for byte.
  std::string golden =
      harness::readTextFile(kFixtures / "golden/argument-type-cascade-report.ttl");
  require(shacl::serializeReportTurtle(badReport, badPrefixes) == golden,
          "golden argument-type report drifted");
}

// --- criterion 2: mixin-pattern reproduction --------------------------------

void checkMixinReproduction(const harness::Workspace& ws) {
  struct Case {
    const char* badFile;
    const char* goodFile;
    const char* substring;
    const char* golden;
  };
  const std::array<Case, 2> cases = {{
      {"tests/LogicalOperators/bad/log-bad-actionable-missing-allof.ttl",
       "tests/LogicalOperators/good/log-good-actionable-intent.ttl",
       "missing BooleanFunction property", "golden/actionable-missing-function-report.ttl"},
      {"tests/LogicalOperators/bad/log-bad-condition-in-intent.ttl",
       "tests/LogicalOperators/good/log-good-hierarchy-chain.ttl",
       "references non-IntentOperand", "golden/operand-hierarchy-report.ttl"},
  }};

  for (const Case& c : cases) {
    rdf::PrefixMap badPrefixes = ws.prefixes;
    Graph bad = parseFile(kFixtures / c.badFile, &badPrefixes);
    auto badReport = shacl::validateGraph(bad, ws.shapes, ws.ontology, &badPrefixes);
    require(badReport.results.size() == 1,
            std::string(c.badFile) + ": expected the single violation, got " +
                std::to_string(badReport.results.size()));
    if (!badReport.results.empty()) {
      require(badReport.results[0].message.find(c.substring) != std::string::npos,
              std::string(c.badFile) + ": message lacks \"" + c.substring + "\"");
    }
    require(shacl::serializeReportTurtle(badReport, badPrefixes) ==
                harness::readTextFile(kFixtures / c.golden),
            std::string(c.golden) + " drifted");

    // Restoring the highlighted lines restores conformance.
    rdf::PrefixMap goodPrefixes = ws.prefixes;
    Graph good = parseFile(kFixtures / c.goodFile, &goodPrefixes);
    require(shacl::validateGraph(good, ws.shapes, ws.ontology, &goodPrefixes).conforms,
            std::string(c.goodFile) + " must conform");
  }
}

// --- criterion 3: corpus -----------------------------------------------------

void checkCorpus(const harness::Workspace& ws) {
  auto start = std::chrono::steady_clock::now();
  auto suite = harness::runTestCorpus(ws, {});
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  int good = 0, bad = 0;
  for (const auto& f : suite.files) (f.testCase.good ? good : bad)++;
  require(suite.files.size() >= 60,
          "corpus has " + std::to_string(suite.files.size()) + " files, need >= 60");
  require(good >= 30, "good corpus has " + std::to_string(good) + " files, need >= 30");
  require(bad >= 30, "bad corpus has " + std::to_string(bad) + " files, need >= 30");
  for (const auto& f : suite.files) {
    if (!f.passed)
      require(false, f.testCase.path.filename().string() + " failed: " + f.detail);
  }
  for (const auto& g : suite.guardFailures) require(false, "guard: " + g);
  require(elapsed < 60000, "sequential corpus run took " + std::to_string(elapsed) + " ms");
}

// --- criterion 4: coverage ---------------------------------------------------

void checkCoverage(const harness::Workspace& ws) {
  auto report = harness::generateCoverage(ws);
  require(report.percent("class") == 100.0, "class coverage below 100%");
  require(report.percent("property") == 100.0, "property coverage below 100%");
  require(report.percent("function") == 100.0, "function coverage below 100%");

  // Single-deletion: deleting one class's node shape uncovers exactly that
  // class; property cells may only drop for the shape's own paths (they are
  // embedded in the deleted shape).
  std::map<Term, std::vector<std::size_t>> classCoverers;
  for (std::size_t i = 0; i < ws.shapes.shapes.size(); ++i) {
    for (const auto& t : ws.shapes.shapes[i].targets) {
      if (t.kind == shacl::Target::Kind::Class) classCoverers[t.value].push_back(i);
    }
  }
  auto baseline = harness::generateCoverage(ws.catalog, ws.shapes, ws.ontology, {});
  auto coveredElements = [](const harness::CoverageReport& r) {
    std::set<std::pair<std::string, std::string>> covered;
    for (const auto& row : r.rows) {
      if (row.shapeCovered) covered.insert({row.category, row.element.value()});
    }
    return covered;
  };
  auto baselineCovered = coveredElements(baseline);

  int deletionsChecked = 0;
  for (const auto& row : baseline.rows) {
    if (row.category != "class") continue;
    auto it = classCoverers.find(row.element);
    if (it == classCoverers.end() || it->second.size() != 1) continue;
    const shacl::NodeShape& doomed = ws.shapes.shapes[it->second.front()];
    std::set<std::string> ownPaths;
    for (const auto& ps : doomed.properties) ownPaths.insert(ps.path.value());

    shacl::ShapesGraph reduced = ws.shapes;
    reduced.shapes.erase(reduced.shapes.begin() + static_cast<long>(it->second.front()));
    auto after = coveredElements(
        harness::generateCoverage(ws.catalog, reduced, ws.ontology, {}));
    std::set<std::string> lostClasses;
    std::set<std::string> lostOther;
    for (const auto& e : baselineCovered) {
      if (after.count(e)) continue;
      if (e.first == "class") {
        lostClasses.insert(e.second);
      } else if (e.first == "property" && ownPaths.count(e.second)) {
        // The shape's own embedded property shapes vanish with it.
      } else {
        lostOther.insert(e.second);
      }
    }
    ++deletionsChecked;
    if (lostClasses != std::set<std::string>{row.element.value()} || !lostOther.empty()) {
      require(false, "deleting the shape for " + row.element.value() + " dropped " +
                         std::to_string(lostClasses.size()) + " class cells and " +
                         std::to_string(lostOther.size()) + " unrelated cells");
    }
  }
  require(deletionsChecked >= 15,
          "only " + std::to_string(deletionsChecked) + " single-class shapes checked");

  // Property shapes: deleting the one shape that paths a property not also
  // referenced by any query uncovers exactly that property.
  int propertyDeletions = 0;
  for (std::size_t i = 0; i < ws.shapes.shapes.size(); ++i) {
    const auto& shape = ws.shapes.shapes[i];
    for (std::size_t p = 0; p < shape.properties.size(); ++p) {
      shacl::ShapesGraph reduced = ws.shapes;
      reduced.shapes[i].properties.erase(reduced.shapes[i].properties.begin() +
                                         static_cast<long>(p));
      auto after = coveredElements(
          harness::generateCoverage(ws.catalog, reduced, ws.ontology, {}));
      std::set<std::pair<std::string, std::string>> lost;
      for (const auto& e : baselineCovered) {
        if (!after.count(e)) lost.insert(e);
      }
      if (lost.size() > 1)
        require(false, "deleting one property shape dropped " + std::to_string(lost.size()) +
                           " cells");
      propertyDeletions += lost.size() == 1 ? 1 : 0;
    }
  }
  require(propertyDeletions >= 15, "too few single-property deletions observed: " +
                                       std::to_string(propertyDeletions));
}

// --- criterion 5: tier equivalence and benchmark protocol -------------------

void checkTierEquivalence(const harness::Workspace& afWs) {
  harness::Workspace sparqlWs = harness::loadWorkspace(kFixtures, harness::Tier::Sparql);
  auto cases = harness::discoverTestCases(kFixtures, "", afWs.prefixes);
  for (const auto& tc : cases) {
    Graph data;
    try {
      data = parseFile(tc.path);
    } catch (const std::exception&) {
      continue;
    }
    auto af = resultKeys(shacl::validateGraph(data, afWs.shapes, afWs.ontology, &afWs.prefixes));
    auto sparql = resultKeys(
        shacl::validateGraph(data, sparqlWs.shapes, sparqlWs.ontology, &afWs.prefixes));
    if (af != sparql)
      require(false, tc.path.filename().string() + ": tier violation sets differ");
  }

  // Protocol-faithful benchmark output: 2 warmups, 6 measured repetitions,
  // per-file samples and standard deviation.
  harness::BenchConfig config;
  auto bench = harness::runBenchmark(kFixtures, config);
  require(bench.tiersAgree, "benchmark tier comparison disagrees");
  require(!bench.entries.empty(), "benchmark produced no entries");
  std::size_t files = bench.entries.size() / 2;
  for (const auto& e : bench.entries) {
    if (e.samplesMs.size() != 6)
      require(false, e.file + ": expected 6 samples, got " +
                         std::to_string(e.samplesMs.size()));
    (void)e.stddevMs();
  }
  std::string csv = bench.toCsv();
  std::size_t rows = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) - 1;
  require(rows == files * 2 * 6,
          "bench.csv rows = " + std::to_string(rows) + ", expected files x tiers x 6");
  require(bench.afOverheadPercent.has_value(), "overhead percentage missing");
}

// --- criterion 6: SPARQL oracle equivalence ----------------------------------

void checkSparqlOracle() {
  testsupport::QueryGen gen(0xac5ed);
  const testsupport::QueryGen::Flavor flavors[] = {
      testsupport::QueryGen::Flavor::Bgp,
      testsupport::QueryGen::Flavor::BgpFilter,
      testsupport::QueryGen::Flavor::BgpUnion,
      testsupport::QueryGen::Flavor::BgpOptional,
  };
  int mismatches = 0;
  for (int round = 0; round < 200; ++round) {
    Graph graph = gen.randomGraph(50);
    for (auto flavor : flavors) {
      std::string text = gen.randomQueryText(flavor);
      auto query = sparql::parseQuery(text, gen.prefixes());
      auto actual = testsupport::solutionMultiset(sparql::evaluate(*query, graph, {}));
      auto expected =
          testsupport::solutionMultiset(testsupport::bruteForceEvaluate(*query, graph, {}));
      if (actual != expected) {
        ++mismatches;
        if (mismatches <= 3) require(false, "mismatch on query:\n" + text);
      }
    }
  }
  require(mismatches == 0, std::to_string(mismatches) + " oracle mismatches over 200 graphs");
}

// --- criterion 7: parser round-trip ------------------------------------------

void checkRoundTrip() {
  int checked = 0;
  for (const auto& entry : fs::recursive_directory_iterator(kFixtures)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".ttl") continue;
    if (entry.path().parent_path().filename() == "golden") continue;
    auto first = rdf::parseTurtle(harness::readTextFile(entry.path()));
    std::string serialized = rdf::serializeTurtle(first.graph, first.prefixes);
    auto second = rdf::parseTurtle(serialized);
    if (!rdf::isomorphic(first.graph, second.graph))
      require(false, entry.path().string() + ": round-trip not isomorphic");
    ++checked;
  }
  require(checked >= 80, "only " + std::to_string(checked) + " Turtle files checked");
}

// --- CLI exit-code contract ---------------------------------------------------

int runCli(const std::string& args) {
  std::string cmd = "\"" + kCliPath + "\" " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

void checkExitCodes() {
  std::string corpus = " --corpus \"" + kFixtures.string() + "\" ";
  require(runCli("validate" + corpus + "\"" +
                 (kFixtures / "tests/IntentCommonModel/good/icm-good-video-intent.ttl")
                     .string() +
                 "\"") == 0,
          "conforming file must exit 0");
  require(runCli("validate" + corpus + "\"" +
                 (kFixtures / "tests/QuantityOntology/bad/quan-bad-argtype-broken-chain.ttl")
                     .string() +
                 "\"") == 1,
          "violating file must exit 1");
  require(runCli("validate" + corpus + "/no/such/file.ttl") == 2,
          "missing data file must exit 2");
  require(runCli("test --corpus /no/such/corpus") == 2, "missing corpus must exit 2");
  require(runCli("test" + corpus) == 0, "passing corpus must exit 0");
  require(runCli("coverage" + corpus + "--csv \"\"") == 0, "coverage must exit 0");
}

// --- criterion 8: determinism ------------------------------------------------

void checkDeterminism() {
  fs::path out1 = fs::temp_directory_path() / "intentcheck_det_1.txt";
  fs::path out2 = fs::temp_directory_path() / "intentcheck_det_2.txt";
  std::string base = "\"" + kCliPath + "\" test --corpus \"" + kFixtures.string() + "\"";
  int rc1 = std::system((base + " > " + out1.string() + " 2>&1").c_str());
  int rc2 = std::system((base + " > " + out2.string() + " 2>&1").c_str());
  require(rc1 == 0 && rc2 == 0, "cmd test did not exit 0");
  require(harness::readTextFile(out1) == harness::readTextFile(out2),
          "two cmd-test runs differ");

  // Reports are byte-identical across runs as well.
  fs::path r1 = fs::temp_directory_path() / "intentcheck_det_r1.txt";
  fs::path r2 = fs::temp_directory_path() / "intentcheck_det_r2.txt";
  std::string validate =
      "\"" + kCliPath + "\" validate --corpus \"" + kFixtures.string() + "\" \"" +
      (kFixtures / "tests/QuantityOntology/bad/quan-bad-argtype-broken-chain.ttl").string() +
      "\"";
  int v1 = std::system((validate + " > " + r1.string() + " 2>&1").c_str());
  int v2 = std::system((validate + " > " + r2.string() + " 2>&1").c_str());
  require(v1 == v2, "validate exit codes differ between runs");
  require(harness::readTextFile(r1) == harness::readTextFile(r2),
          "two validate runs differ");
}

}  // namespace

int main() {
  harness::Workspace ws;
  try {
    ws = harness::loadWorkspace(kFixtures, harness::Tier::Af);
  } catch (const std::exception& e) {
    std::printf("FAIL  workspace: %s\n", e.what());
    return 1;
  }

  criterion(1, "paper-example reproduction (conformance, two-violation cascade, < 1 s)",
            [&] { checkCascadeReproduction(ws); });
  criterion(2, "mixin-pattern reproduction (actionable and hierarchy single violations)",
            [&] { checkMixinReproduction(ws); });
  criterion(3, "corpus: >= 60 files, balanced, 100% pass, < 60 s sequential",
            [&] { checkCorpus(ws); });
  criterion(4, "coverage: 100% classes/properties/functions, single-deletion drops one cell",
            [&] { checkCoverage(ws); });
  criterion(5, "tier equivalence across the corpus plus protocol-faithful bench CSV",
            [&] { checkTierEquivalence(ws); });
  criterion(6, "SPARQL evaluator matches brute force on 200 randomized graphs",
            [] { checkSparqlOracle(); });
  criterion(7, "parse-serialize-parse isomorphism for every corpus file",
            [] { checkRoundTrip(); });
  criterion(8, "byte-identical summaries and reports across cmd-test runs",
            [] { checkDeterminism(); });
  criterion(9, "CLI exit-code contract (0 conforms, 1 violations, 2 usage errors)",
            [] { checkExitCodes(); });

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", g_failures);
  return 1;
}
