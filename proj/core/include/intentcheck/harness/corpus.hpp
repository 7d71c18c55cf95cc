#pragma once

#include <optional>
#include <set>

#include "intentcheck/harness/workspace.hpp"
#include "intentcheck/shacl/model.hpp"

namespace intentcheck::harness {

/// One machine-readable `# expect:` header line from a bad test file:
/// source constraint, optional focus node, optional quoted message
/// substring.
struct Expectation {
  std::string constraintToken;
  rdf::Term constraint;
  std::optional<rdf::Term> focus;
  std::optional<std::string> messageSubstring;
};

struct TestCase {
  std::filesystem::path path;
  std::string module;
  bool good = true;
  std::vector<Expectation> expectations;  // bad files only
};

struct FileResult {
  TestCase testCase;
  bool passed = false;
  std::string detail;  // set when failed
  shacl::ValidationReport report;
  std::string serializedReport;
  /// SPARQL-constraint ids whose owning shape targeted >=1 node here.
  std::set<rdf::Term> exercisedConstraints;
};

struct SuiteResult {
  std::vector<FileResult> files;
  std::vector<std::string> guardFailures;

  int passedCount() const;
  int failedCount() const;
  bool allPassed() const { return failedCount() == 0 && guardFailures.empty(); }
  /// Per-module pass/fail table plus totals; byte-deterministic.
  std::string summary() const;
};

struct CorpusOptions {
  std::string moduleFilter;  // empty = all modules
  int jobs = 1;
  bool enforceBalancedGuard = true;
};

/// Sorted discovery of tests/<Module>/{good,bad}/*.ttl under the root.
/// Expectation headers are read here; a bad file without at least one
/// `# expect:` line fails when run.
std::vector<TestCase> discoverTestCases(const std::filesystem::path& root,
                                        const std::string& moduleFilter,
                                        const rdf::PrefixMap& defaults);

/// Validates every test file. Good files must conform; bad files must
/// contain every expected violation and may carry extra cascading ones.
/// Unparseable files fail individually, never the run. The balanced-corpus
/// guard fails the suite when any SPARQL constraint lacks a good or a bad
/// exercising file.
SuiteResult runTestCorpus(const Workspace& workspace, const CorpusOptions& options);

}  // namespace intentcheck::harness
