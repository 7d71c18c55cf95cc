#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "intentcheck/graph.hpp"

namespace intentcheck::rdf {

/// Syntax or prefix-resolution error with source position.
class TurtleError : public std::runtime_error {
 public:
  TurtleError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ParsedTurtle {
  Graph graph;
  PrefixMap prefixes;
};

/// Parses the Turtle subset documented in docs/turtle-subset.md:
/// @prefix/@base, prefixed names, absolute IRIs, the `a` keyword, labelled
/// and anonymous blank nodes, collections, predicate-object and object
/// lists, string/numeric/boolean literals, ^^ datatypes and @lang tags.
ParsedTurtle parseTurtle(const std::string& text, const std::optional<std::string>& base = {});

/// Deterministic serialization: prefix block sorted by label, IRI subjects
/// lexicographically before blank-node subjects (ordered by canonical
/// label), rdf:type rendered first as `a`. Collections are written as
/// explicit rdf:first/rdf:rest triples, so parse(serialize(g)) is
/// isomorphic to g rather than byte-identical.
std::string serializeTurtle(const Graph& graph, const PrefixMap& prefixes);

/// Turtle rendering of one term: compacted via prefixes when possible,
/// literal shorthands for canonical integers/decimals/booleans.
std::string renderTerm(const Term& term, const PrefixMap& prefixes);

}  // namespace intentcheck::rdf
