#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "intentcheck/term.hpp"

namespace intentcheck::sparql {

using rdf::Term;

/// Constant term or variable slot in a triple pattern.
struct PatTerm {
  bool isVar = false;
  Term term;        // when !isVar
  std::string var;  // bare name, no ?/$ sigil

  static PatTerm constant(Term t) { return {false, std::move(t), {}}; }
  static PatTerm variable(std::string name) { return {true, {}, std::move(name)}; }
};

/// Property path: predicate IRIs, / sequences, and * closures.
struct PathExpr {
  enum class Kind { Predicate, Sequence, ZeroOrMore };
  Kind kind = Kind::Predicate;
  Term predicate;                   // Predicate
  std::unique_ptr<PathExpr> left;   // Sequence
  std::unique_ptr<PathExpr> right;  // Sequence
  std::unique_ptr<PathExpr> inner;  // ZeroOrMore
};

struct Expr {
  enum class Kind {
    Var,
    Const,
    Compare,
    And,
    Or,
    Not,
    Bound,
    If,
    Str,
    StrStarts,
    IsLiteral,
    Datatype,
  };
  enum class CmpOp { Lt, Le, Gt, Ge, Eq, Ne };

  Kind kind = Kind::Const;
  CmpOp op = CmpOp::Eq;  // Compare only
  std::string var;       // Var / Bound
  Term constant;         // Const
  std::vector<std::unique_ptr<Expr>> args;
};

struct TriplePattern {
  PatTerm subject;
  std::variant<PatTerm, std::unique_ptr<PathExpr>> predicate;
  PatTerm object;
};

struct Query;
struct GroupPattern;

struct Element {
  enum class Kind { Triple, Group, Optional, Union, Filter, NotExists, Bind, SubSelect };
  Kind kind = Kind::Triple;
  TriplePattern triple;                       // Triple
  std::unique_ptr<GroupPattern> groupA;       // Group / Optional / NotExists / Union left
  std::unique_ptr<GroupPattern> groupB;       // Union right
  std::unique_ptr<Expr> expr;                 // Filter / Bind
  std::string bindVar;                        // Bind
  std::shared_ptr<const Query> subquery;      // SubSelect
};

struct GroupPattern {
  std::vector<Element> elements;
};

/// Single-COUNT aggregation, the only aggregate shape in the dialect.
struct Aggregate {
  std::string countVar;
  std::string alias;
  std::vector<std::string> groupBy;
};

struct Query {
  std::vector<std::string> projection;
  GroupPattern where;
  std::optional<Aggregate> aggregate;
  /// Variables written with the $ sigil, conventionally pre-bound.
  std::set<std::string> preBindable;
  std::string text;
};

/// A variable binding set produced by evaluation.
struct Solution {
  std::map<std::string, Term> bindings;

  bool bound(const std::string& name) const { return bindings.count(name) > 0; }
  const Term* get(const std::string& name) const {
    auto it = bindings.find(name);
    return it == bindings.end() ? nullptr : &it->second;
  }
  /// Shared variables must bind identical terms for two solutions to join.
  bool compatibleWith(const Solution& other) const;
  Solution mergedWith(const Solution& other) const;

  bool operator==(const Solution& other) const { return bindings == other.bindings; }
  bool operator<(const Solution& other) const { return bindings < other.bindings; }
  std::string toString() const;
};

/// All IRI constants mentioned anywhere in the query (patterns, paths,
/// expressions); used by the coverage reporter.
std::set<Term> mentionedIris(const Query& query);

}  // namespace intentcheck::sparql
