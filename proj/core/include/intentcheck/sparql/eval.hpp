#pragma once

#include <set>
#include <variant>
#include <vector>

#include "intentcheck/graph.hpp"
#include "intentcheck/sparql/ast.hpp"

namespace intentcheck::sparql {

/// Expression evaluation error marker (unbound operand, type mismatch).
/// FILTER treats it as effective-boolean false; BIND leaves the target
/// variable unbound.
struct EvalError {
  bool operator==(const EvalError&) const { return true; }
};

using EvalValue = std::variant<rdf::Term, EvalError>;

inline bool isError(const EvalValue& v) { return std::holds_alternative<EvalError>(v); }

/// Solutions of the query under left-to-right join semantics with the
/// pre-bindings injected before pattern matching. Deterministic order:
/// pattern-match (insertion) order, union branches left before right.
std::vector<Solution> evaluate(const Query& query, const rdf::Graph& data,
                               const Solution& preBindings);

/// Nodes reachable from start via the path. ZeroOrMore includes start
/// itself; Sequence composes left-to-right. Cycles are handled by
/// reachability semantics (each node visited at most once).
std::set<rdf::Term> evalPath(const rdf::Graph& data, const rdf::Term& start,
                             const PathExpr& path);

EvalValue evalExpr(const Expr& expr, const Solution& solution, const rdf::Graph& data);

/// SPARQL effective boolean value; std::nullopt for error.
std::optional<bool> effectiveBoolean(const EvalValue& value);

}  // namespace intentcheck::sparql
