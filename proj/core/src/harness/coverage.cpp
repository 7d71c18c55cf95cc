#include "intentcheck/harness/coverage.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "intentcheck/sparql/ast.hpp"
#include "intentcheck/turtle.hpp"

namespace intentcheck::harness {

using rdf::Term;

namespace {

std::string formatPercent(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f%%", p);
  return buf;
}

}  // namespace

int CoverageReport::covered(const std::string& category) const {
  int n = 0;
  for (const Row& r : rows) n += (r.category == category && r.shapeCovered) ? 1 : 0;
  return n;
}

int CoverageReport::total(const std::string& category) const {
  int n = 0;
  for (const Row& r : rows) n += (r.category == category) ? 1 : 0;
  return n;
}

double CoverageReport::percent(const std::string& category) const {
  int t = total(category);
  return t == 0 ? 100.0 : 100.0 * covered(category) / t;
}

double CoverageReport::overallPercent() const {
  int coveredAll = 0, totalAll = 0;
  for (const Row& r : rows) {
    ++totalAll;
    coveredAll += r.shapeCovered ? 1 : 0;
  }
  return totalAll == 0 ? 100.0 : 100.0 * coveredAll / totalAll;
}

std::string CoverageReport::toCsv() const {
  std::ostringstream out;
  out << "module,category,element,shape_covered,test_covered\n";
  for (const Row& r : rows) {
    out << r.module << "," << r.category << "," << r.element.value() << ","
        << (r.shapeCovered ? 1 : 0) << "," << (r.testCovered ? 1 : 0) << "\n";
  }
  return out.str();
}

std::string CoverageReport::summary() const {
  std::ostringstream out;
  out << "module                          classes     properties  functions\n";
  for (const ModuleStats& m : moduleStats) {
    std::string name = m.module;
    if (name.size() < 30) name.resize(30, ' ');
    out << name << "  " << m.classesCovered << "/" << m.classesTotal << "         "
        << m.propertiesCovered << "/" << m.propertiesTotal << "         " << m.functionsCovered
        << "/" << m.functionsTotal << "\n";
  }
  out << "classes: " << formatPercent(percent("class"))
      << "  properties: " << formatPercent(percent("property"))
      << "  functions: " << formatPercent(percent("function")) << "\n";
  out << "overall: " << formatPercent(overallPercent()) << "\n";
  return out.str();
}

CoverageReport generateCoverage(const tio::VocabularyCatalog& catalog,
                                const shacl::ShapesGraph& shapes, const rdf::Graph& ontology,
                                const std::vector<rdf::Graph>& testGraphs) {
  CoverageReport report;

  // Shape-side inventories.
  std::set<Term> targetedClasses;
  std::set<Term> propertyPaths;
  std::set<Term> queryMentions;
  struct FunctionValidator {
    std::set<Term> coveringClasses;  // parameter values plus query constants
    bool arity = false;
    bool argumentTypes = false;
  };
  std::vector<FunctionValidator> validators;

  auto noteQuery = [&](const sparql::Query& q, const sparql::Solution& params) {
    auto iris = sparql::mentionedIris(q);
    queryMentions.insert(iris.begin(), iris.end());
    FunctionValidator v;
    v.arity = iris.count(Term::iri(tio::ns::kArityMin)) > 0;
    v.argumentTypes = iris.count(Term::iri(tio::ns::kArgumentTypes)) > 0;
    if (v.arity || v.argumentTypes) {
      v.coveringClasses = iris;
      for (const auto& [name, value] : params.bindings) v.coveringClasses.insert(value);
      validators.push_back(std::move(v));
    }
  };

  for (const shacl::NodeShape& shape : shapes.shapes) {
    for (const shacl::Target& t : shape.targets) {
      if (t.kind == shacl::Target::Kind::Class) targetedClasses.insert(t.value);
    }
    for (const shacl::PropertyShape& ps : shape.properties) propertyPaths.insert(ps.path);
    for (const shacl::SparqlConstraintDef& def : shape.sparqlConstraints)
      noteQuery(*def.query, def.parameterBindings);
    for (const shacl::Target& t : shape.targets) {
      if (t.kind == shacl::Target::Kind::Sparql && t.query) noteQuery(*t.query, {});
    }
  }
  for (const auto& [id, tt] : shapes.targetTypes) noteQuery(*tt.query, {});
  for (const auto& [id, c] : shapes.components) {
    auto iris = sparql::mentionedIris(*c.validator);
    queryMentions.insert(iris.begin(), iris.end());
  }

  // Test-side inventory.
  std::set<Term> testTerms;
  for (const rdf::Graph& g : testGraphs) {
    for (const rdf::Triple& t : g.triples()) {
      testTerms.insert(t.subject);
      testTerms.insert(t.predicate);
      testTerms.insert(t.object);
    }
  }

  rdf::Graph empty;
  auto functionCovered = [&](const Term& fn) {
    std::set<Term> closure = rdf::typesOf(ontology, fn, empty);
    bool arity = false, argTypes = false;
    for (const FunctionValidator& v : validators) {
      bool covers = false;
      for (const Term& c : v.coveringClasses) covers |= closure.count(c) > 0;
      if (!covers) continue;
      arity |= v.arity;
      argTypes |= v.argumentTypes;
    }
    return arity && argTypes;
  };

  for (const tio::ModuleCatalog& module : catalog.modules) {
    CoverageReport::ModuleStats stats;
    stats.module = module.name;
    for (const Term& cls : module.classes) {
      CoverageReport::Row row{module.name, "class", cls, targetedClasses.count(cls) > 0,
                              testTerms.count(cls) > 0};
      ++stats.classesTotal;
      stats.classesCovered += row.shapeCovered ? 1 : 0;
      report.rows.push_back(std::move(row));
    }
    for (const Term& prop : module.properties) {
      bool covered = propertyPaths.count(prop) > 0 || queryMentions.count(prop) > 0;
      CoverageReport::Row row{module.name, "property", prop, covered, testTerms.count(prop) > 0};
      ++stats.propertiesTotal;
      stats.propertiesCovered += row.shapeCovered ? 1 : 0;
      report.rows.push_back(std::move(row));
    }
    for (const auto& [fn, sig] : module.functions) {
      CoverageReport::Row row{module.name, "function", fn, functionCovered(fn),
                              testTerms.count(fn) > 0};
      ++stats.functionsTotal;
      stats.functionsCovered += row.shapeCovered ? 1 : 0;
      report.rows.push_back(std::move(row));
    }
    report.moduleStats.push_back(std::move(stats));
  }
  return report;
}

CoverageReport generateCoverage(const Workspace& ws) {
  std::vector<rdf::Graph> testGraphs;
  std::filesystem::path testsDir = ws.root / "tests";
  if (std::filesystem::is_directory(testsDir)) {
    std::vector<std::filesystem::path> moduleDirs;
    for (const auto& entry : std::filesystem::directory_iterator(testsDir)) {
      if (entry.is_directory()) moduleDirs.push_back(entry.path());
    }
    std::sort(moduleDirs.begin(), moduleDirs.end());
    for (const auto& moduleDir : moduleDirs) {
      for (const char* polarity : {"good", "bad"}) {
        for (const auto& file : listTurtleFiles(moduleDir / polarity)) {
          try {
            testGraphs.push_back(rdf::parseTurtle(readTextFile(file)).graph);
          } catch (const std::exception&) {
            // Unparseable test files simply contribute no coverage.
          }
        }
      }
    }
  }
  return generateCoverage(ws.catalog, ws.shapes, ws.ontology, testGraphs);
}

}  // namespace intentcheck::harness
