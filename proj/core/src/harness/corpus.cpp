#include "intentcheck/harness/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <sstream>
#include <thread>

#include "intentcheck/shacl/report.hpp"
#include "intentcheck/shacl/validator.hpp"
#include "intentcheck/turtle.hpp"

namespace intentcheck::harness {

namespace fs = std::filesystem;
using rdf::Term;

namespace {

// `# expect: <constraint> [focus] ["substring"]`, curies resolved against
// the test file's prefixes plus harness defaults.
std::vector<std::string> splitExpectTokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '"') {
      std::size_t close = line.find('"', i + 1);
      if (close == std::string::npos) close = line.size();
      tokens.push_back(line.substr(i, close - i + 1));
      i = close + 1;
    } else {
      std::size_t end = i;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      tokens.push_back(line.substr(i, end - i));
      i = end;
    }
  }
  return tokens;
}

std::optional<Term> resolveNodeToken(const std::string& token, const rdf::PrefixMap& prefixes) {
  if (token.size() > 2 && token.front() == '<' && token.back() == '>')
    return Term::iri(token.substr(1, token.size() - 2));
  if (token.rfind("_:", 0) == 0) return Term::blank(token.substr(2));
  auto colon = token.find(':');
  if (colon == std::string::npos) return std::nullopt;
  auto expanded = prefixes.expand(token.substr(0, colon), token.substr(colon + 1));
  if (!expanded) return std::nullopt;
  return Term::iri(*expanded);
}

std::vector<std::string> expectLines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find("# expect:");
    if (pos != std::string::npos) lines.push_back(line.substr(pos + 9));
  }
  return lines;
}

}  // namespace

int SuiteResult::passedCount() const {
  int n = 0;
  for (const FileResult& f : files) n += f.passed ? 1 : 0;
  return n;
}

int SuiteResult::failedCount() const { return static_cast<int>(files.size()) - passedCount(); }

std::string SuiteResult::summary() const {
  struct Row {
    int goodPass = 0, goodTotal = 0, badPass = 0, badTotal = 0;
  };
  std::map<std::string, Row> byModule;
  for (const FileResult& f : files) {
    Row& row = byModule[f.testCase.module];
    if (f.testCase.good) {
      ++row.goodTotal;
      row.goodPass += f.passed ? 1 : 0;
    } else {
      ++row.badTotal;
      row.badPass += f.passed ? 1 : 0;
    }
  }
  std::ostringstream out;
  out << "module                          good        bad\n";
  for (const auto& [module, row] : byModule) {
    std::string name = module;
    if (name.size() < 30) name.resize(30, ' ');
    out << name << "  " << row.goodPass << "/" << row.goodTotal << "        " << row.badPass
        << "/" << row.badTotal << "\n";
  }
  out << "total: " << passedCount() << "/" << files.size() << " passed";
  if (failedCount() > 0) {
    out << "\nfailed files:";
    for (const FileResult& f : files) {
      if (!f.passed) out << "\n  " << f.testCase.path.generic_string() << ": " << f.detail;
    }
  }
  for (const std::string& g : guardFailures) out << "\nguard: " << g;
  out << "\n";
  return out.str();
}

std::vector<TestCase> discoverTestCases(const fs::path& root, const std::string& moduleFilter,
                                        const rdf::PrefixMap& defaults) {
  std::vector<TestCase> cases;
  fs::path testsDir = root / "tests";
  if (!fs::is_directory(testsDir)) return cases;

  std::vector<fs::path> moduleDirs;
  for (const auto& entry : fs::directory_iterator(testsDir)) {
    if (entry.is_directory()) moduleDirs.push_back(entry.path());
  }
  std::sort(moduleDirs.begin(), moduleDirs.end());

  for (const fs::path& moduleDir : moduleDirs) {
    std::string module = moduleDir.filename().string();
    if (!moduleFilter.empty() && module != moduleFilter) continue;
    for (bool good : {true, false}) {
      for (const fs::path& file : listTurtleFiles(moduleDir / (good ? "good" : "bad"))) {
        TestCase tc;
        tc.path = file;
        tc.module = module;
        tc.good = good;
        if (!good) {
          std::string text = readTextFile(file);
          rdf::PrefixMap prefixes = defaults;
          try {
            prefixes.merge(rdf::parseTurtle(text).prefixes);
          } catch (const rdf::TurtleError&) {
            // Unparseable file: expectations resolved against defaults;
            // the run itself will report the parse failure.
          }
          for (const std::string& line : expectLines(text)) {
            auto tokens = splitExpectTokens(line);
            if (tokens.empty()) continue;
            Expectation e;
            e.constraintToken = tokens[0];
            if (auto c = resolveNodeToken(tokens[0], prefixes)) e.constraint = *c;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
              if (tokens[i].size() >= 2 && tokens[i].front() == '"') {
                e.messageSubstring = tokens[i].substr(1, tokens[i].size() - 2);
              } else if (auto f = resolveNodeToken(tokens[i], prefixes)) {
                e.focus = *f;
              }
            }
            tc.expectations.push_back(std::move(e));
          }
        }
        cases.push_back(std::move(tc));
      }
    }
  }
  return cases;
}

namespace {

FileResult runOne(const Workspace& ws, const TestCase& tc) {
  FileResult result;
  result.testCase = tc;

  rdf::Graph data;
  rdf::PrefixMap filePrefixes;
  try {
    rdf::ParsedTurtle parsed = rdf::parseTurtle(readTextFile(tc.path));
    data = std::move(parsed.graph);
    filePrefixes = std::move(parsed.prefixes);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("parse error: ") + e.what();
    return result;
  }
  data.freeze();

  rdf::PrefixMap display = ws.prefixes;
  display.merge(filePrefixes);

  try {
    result.report = shacl::validateGraph(data, ws.shapes, ws.ontology, &display);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("validation aborted: ") + e.what();
    return result;
  }
  result.serializedReport = shacl::serializeReportTurtle(result.report, display);

  for (const shacl::NodeShape& shape : ws.shapes.shapes) {
    if (shape.sparqlConstraints.empty()) continue;
    if (!shacl::resolveTargets(shape, data, ws.shapes, ws.ontology).empty()) {
      for (const auto& def : shape.sparqlConstraints) result.exercisedConstraints.insert(def.id);
    }
  }

  if (tc.good) {
    result.passed = result.report.conforms;
    if (!result.passed) {
      std::ostringstream detail;
      detail << "expected conformance, got " << result.report.results.size() << " result(s):";
      for (const auto& r : result.report.results)
        detail << " [" << r.focusNode.toString() << "] " << r.message;
      result.detail = detail.str();
    }
    return result;
  }

  if (tc.expectations.empty()) {
    result.passed = false;
    result.detail = "bad test file carries no `# expect:` header";
    return result;
  }
  for (const Expectation& e : tc.expectations) {
    bool matched = false;
    for (const shacl::ValidationResult& r : result.report.results) {
      if (!r.sourceConstraint || !(*r.sourceConstraint == e.constraint)) continue;
      if (e.focus && !(r.focusNode == *e.focus)) continue;
      if (e.messageSubstring && r.message.find(*e.messageSubstring) == std::string::npos)
        continue;
      matched = true;
      break;
    }
    if (!matched) {
      result.passed = false;
      std::ostringstream detail;
      detail << "expected violation not found: " << e.constraintToken;
      if (e.focus) detail << " focus " << e.focus->toString();
      if (e.messageSubstring) detail << " message ~ \"" << *e.messageSubstring << "\"";
      detail << "; report has " << result.report.results.size() << " result(s)";
      for (const auto& r : result.report.results)
        detail << "\n    " << (r.sourceConstraint ? r.sourceConstraint->toString() : "-") << " @ "
               << r.focusNode.toString() << ": " << r.message;
      result.detail = detail.str();
      return result;
    }
  }
  result.passed = true;
  return result;
}

}  // namespace

SuiteResult runTestCorpus(const Workspace& ws, const CorpusOptions& options) {
  rdf::PrefixMap defaults;
  defaults.bind("sh", rdf::vocab::kShNs);
  defaults.bind("rdf", rdf::vocab::kRdfNs);
  defaults.bind("rdfs", rdf::vocab::kRdfsNs);
  defaults.bind("xsd", rdf::vocab::kXsdNs);
  defaults.bind("tio", tio::ns::kRoot);
  defaults.merge(ws.prefixes);

  SuiteResult suite;
  std::vector<TestCase> cases = discoverTestCases(ws.root, options.moduleFilter, defaults);
  suite.files.resize(cases.size());

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || cases.size() <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) suite.files[i] = runOne(ws, cases[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= cases.size()) return;
        suite.files[i] = runOne(ws, cases[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  // The balance guard is a whole-corpus property; module-filtered runs
  // skip it.
  if (options.enforceBalancedGuard && options.moduleFilter.empty()) {
    // Every SPARQL constraint needs a good file that targets it and a bad
    // file expecting it.
    std::set<Term> allConstraints;
    for (const auto& shape : ws.shapes.shapes) {
      for (const auto& def : shape.sparqlConstraints) allConstraints.insert(def.id);
    }
    for (const Term& id : allConstraints) {
      bool goodExercised = false;
      bool badExpected = false;
      for (const FileResult& f : suite.files) {
        if (f.testCase.good && f.exercisedConstraints.count(id)) goodExercised = true;
        if (!f.testCase.good) {
          for (const Expectation& e : f.testCase.expectations)
            badExpected |= (e.constraint == id);
        }
      }
      if (!goodExercised)
        suite.guardFailures.push_back("constraint " + id.toString() +
                                      " is not exercised by any good test");
      if (!badExpected)
        suite.guardFailures.push_back("constraint " + id.toString() +
                                      " is not expected by any bad test");
    }
  }
  return suite;
}

}  // namespace intentcheck::harness
