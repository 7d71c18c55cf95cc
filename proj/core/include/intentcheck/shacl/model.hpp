#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "intentcheck/graph.hpp"
#include "intentcheck/sparql/ast.hpp"

namespace intentcheck::shacl {

using rdf::Term;

enum class Severity { Info, Warning, Violation };

std::string severityIri(Severity s);
std::optional<Severity> severityFromIri(const std::string& iri);

enum class NodeKind {
  Iri,
  BlankNode,
  Literal,
  BlankNodeOrIri,
  BlankNodeOrLiteral,
  IriOrLiteral,
};

struct Target {
  enum class Kind {
    Class,        // sh:targetClass (and implicit class targets)
    Node,         // sh:targetNode
    SubjectsOf,   // sh:targetSubjectsOf
    ObjectsOf,    // sh:targetObjectsOf
    Sparql,       // sh:target [ a sh:SPARQLTarget ; sh:select ... ]
    TargetType,   // sh:target [ a <declared sh:SPARQLTargetType> ; params ]
  };
  Kind kind = Kind::Class;
  Term value;                                        // class / node / predicate
  std::shared_ptr<const sparql::Query> query;        // Sparql
  Term typeId;                                       // TargetType
  std::map<std::string, std::vector<Term>> params;   // TargetType, by parameter name
};

struct CoreConstraint {
  enum class Kind {
    Class,
    Datatype,
    NodeKind,
    MinCount,
    MaxCount,
    In,
    Pattern,
    HasValue,
    MinInclusive,
    Or,
    And,
  };
  Kind kind = Kind::Class;
  Term term;                    // Class / Datatype / HasValue / MinInclusive literal
  long long count = 0;          // MinCount / MaxCount
  std::vector<Term> list;       // In
  std::string pattern;          // Pattern
  NodeKind nodeKind = NodeKind::Iri;
  std::vector<Term> shapeRefs;  // Or / And member shape ids
};

/// A SPARQL-based constraint ready to evaluate: either an inline
/// sh:sparql constraint or a constraint-component instantiation with its
/// parameter variables pre-bound.
struct SparqlConstraintDef {
  Term id;  // reported as sh:sourceConstraint
  std::shared_ptr<const sparql::Query> query;
  std::string messageTemplate;
  sparql::Solution parameterBindings;
};

struct PropertyShape {
  Term id;
  Term path;  // single predicate IRI
  std::vector<CoreConstraint> constraints;
  Severity severity = Severity::Violation;
  std::vector<std::string> messages;
};

struct NodeShape {
  Term id;
  std::vector<Target> targets;
  std::vector<CoreConstraint> constraints;
  std::vector<PropertyShape> properties;
  std::vector<SparqlConstraintDef> sparqlConstraints;
  Severity severity = Severity::Violation;
  std::vector<std::string> messages;
};

struct ComponentParameter {
  Term path;
  std::string name;  // local name of path, the validator's $variable
  bool optional = false;
};

struct ConstraintComponent {
  Term id;
  std::vector<ComponentParameter> parameters;
  std::shared_ptr<const sparql::Query> validator;
  std::string messageTemplate;
  std::string selectText;
};

struct SparqlTargetType {
  Term id;
  std::vector<ComponentParameter> parameters;
  std::shared_ptr<const sparql::Query> query;  // projects ?this
  std::string selectText;
};

/// Compiled validation program: shapes plus the SHACL-AF declarations they
/// may reference. Immutable once loaded.
struct ShapesGraph {
  std::vector<NodeShape> shapes;
  /// Shapes referenced from sh:or/sh:and lists, including anonymous inline
  /// members; keyed by id. Entries may also appear in `shapes`.
  std::map<Term, NodeShape> shapesById;
  std::map<Term, ConstraintComponent> components;
  std::map<Term, SparqlTargetType> targetTypes;
  rdf::PrefixMap prefixes;

  const NodeShape* findShape(const Term& id) const {
    auto it = shapesById.find(id);
    return it == shapesById.end() ? nullptr : &it->second;
  }
};

struct ValidationResult {
  Term focusNode;
  std::optional<Term> path;
  std::optional<Term> value;
  Severity severity = Severity::Violation;
  Term sourceShape;
  std::optional<Term> sourceConstraint;
  std::string message;  // always non-empty

  bool operator==(const ValidationResult& other) const;
  bool operator<(const ValidationResult& other) const;
};

struct ValidationReport {
  bool conforms = true;
  std::vector<ValidationResult> results;
};

}  // namespace intentcheck::shacl
