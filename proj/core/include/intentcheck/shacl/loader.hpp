#pragma once

#include <stdexcept>

#include "intentcheck/shacl/model.hpp"

namespace intentcheck::shacl {

/// Malformed shape, unknown sh:-namespace parameter, dialect violation in
/// an embedded query, or a cyclic sh:or/sh:and reference.
class ShapesError : public std::runtime_error {
 public:
  explicit ShapesError(const std::string& message) : std::runtime_error(message) {}
};

/// Compiles a parsed shapes graph. All subjects typed sh:NodeShape are
/// compiled; a subject additionally typed rdfs:Class targets its own
/// instances (implicit class target). Constraint components are
/// instantiated on shapes that bind their parameter predicates. Unknown
/// sh:-namespace predicates are a load error, never ignored.
ShapesGraph loadShapes(const rdf::Graph& shapesGraph, const rdf::PrefixMap& prefixes);

/// Instantiates a component with explicit parameter bindings (by parameter
/// name). Missing mandatory parameters raise ShapesError naming them.
SparqlConstraintDef instantiateComponent(const ConstraintComponent& component,
                                         const std::map<std::string, Term>& bindings);

}  // namespace intentcheck::shacl
