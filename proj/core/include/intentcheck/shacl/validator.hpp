#pragma once

#include <set>
#include <stdexcept>

#include "intentcheck/shacl/model.hpp"

namespace intentcheck::shacl {

/// SPARQL-constraint execution failure; names the shape and query rather
/// than passing silently.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message) : std::runtime_error(message) {}
};

/// Validates data against every shape: for each shape x resolved focus
/// node x constraint, collects results. Report ordering is deterministic;
/// conforms is true iff no result carries Violation severity.
/// displayPrefixes (when given) are used to compact terms inside rendered
/// messages; they default to the shapes graph's prefixes.
ValidationReport validateGraph(const rdf::Graph& data, const ShapesGraph& shapes,
                               const rdf::Graph& ontology,
                               const rdf::PrefixMap* displayPrefixes = nullptr);

/// Union over all the shape's target declarations. TargetClass selects via
/// the subclass closure; SPARQL targets project ?this over the data graph.
std::set<Term> resolveTargets(const NodeShape& shape, const rdf::Graph& data,
                              const ShapesGraph& shapes, const rdf::Graph& ontology);

/// One core constraint against already-computed value nodes. The shapes
/// graph is required for sh:or / sh:and member resolution.
std::vector<ValidationResult> checkCoreConstraint(const CoreConstraint& constraint,
                                                  const Term& focus,
                                                  const std::vector<Term>& valueNodes,
                                                  const rdf::Graph& data,
                                                  const rdf::Graph& ontology,
                                                  const ShapesGraph* shapes = nullptr);

/// Evaluates a SPARQL constraint with $this pre-bound to focus over the
/// merged data+ontology graph. Each solution row becomes one result.
std::vector<ValidationResult> evalSparqlConstraint(const SparqlConstraintDef& constraint,
                                                   const Term& focus,
                                                   const rdf::Graph& dataAndOntology,
                                                   const rdf::PrefixMap& displayPrefixes,
                                                   const Term& sourceShape,
                                                   Severity severity = Severity::Violation);

/// Node set of a parameterized target-type instance over the data graph,
/// identical to inlining the substituted query as a SPARQL target.
std::set<Term> resolveSparqlTargetType(const Target& target, const ShapesGraph& shapes,
                                       const rdf::Graph& data);

/// Substitutes {$this} / {?var} placeholders with the compact form of the
/// bound term; unbound placeholders stay as literal text.
std::string renderMessage(const std::string& messageTemplate, const sparql::Solution& row,
                          const rdf::PrefixMap& prefixes);

}  // namespace intentcheck::shacl
