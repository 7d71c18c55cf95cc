#pragma once

#include <string>
#include <vector>

#include "intentcheck/graph.hpp"
#include "intentcheck/sparql/ast.hpp"

namespace intentcheck::testsupport {

/// Independent reference evaluator for the generated query subset (basic
/// graph patterns, FILTER, UNION, OPTIONAL): nested-loop unification of
/// every pattern against the full triple list, with SPARQL-algebra
/// join/left-join/union over independently computed operands. Intentionally
/// shares no evaluation machinery with sparql::evaluate. Throws on
/// constructs outside the generated subset.
std::vector<sparql::Solution> bruteForceEvaluate(const sparql::Query& query,
                                                 const rdf::Graph& graph,
                                                 const sparql::Solution& preBindings);

/// Sorted rendering for order-insensitive multiset comparison.
std::vector<std::string> solutionMultiset(const std::vector<sparql::Solution>& solutions);

}  // namespace intentcheck::testsupport
