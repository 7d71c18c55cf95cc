#pragma once

#include <string>
#include <vector>

#include "intentcheck/harness/workspace.hpp"

namespace intentcheck::harness {

/// Vocabulary coverage matrix: which catalog elements are backed by shapes
/// and which appear in at least one test file.
struct CoverageReport {
  struct Row {
    std::string module;
    std::string category;  // "class" | "property" | "function"
    rdf::Term element;
    bool shapeCovered = false;
    bool testCovered = false;
  };
  struct ModuleStats {
    std::string module;
    int classesCovered = 0, classesTotal = 0;
    int propertiesCovered = 0, propertiesTotal = 0;
    int functionsCovered = 0, functionsTotal = 0;
  };

  std::vector<Row> rows;
  std::vector<ModuleStats> moduleStats;

  int covered(const std::string& category) const;
  int total(const std::string& category) const;
  double percent(const std::string& category) const;
  /// Weighted across all three categories.
  double overallPercent() const;

  std::string toCsv() const;
  std::string summary() const;
};

/// A class counts covered when some node shape targets it; a property when
/// some property shape paths it or some SPARQL query references it; a
/// function when both the arity and the argument-type validators cover its
/// type closure. Test coverage means the element appears in >=1 test graph.
CoverageReport generateCoverage(const tio::VocabularyCatalog& catalog,
                                const shacl::ShapesGraph& shapes, const rdf::Graph& ontology,
                                const std::vector<rdf::Graph>& testGraphs);

/// Convenience: loads every test file under the workspace root.
CoverageReport generateCoverage(const Workspace& workspace);

}  // namespace intentcheck::harness
