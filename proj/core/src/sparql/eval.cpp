#include "intentcheck/sparql/eval.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace intentcheck::sparql {

using rdf::Graph;
using rdf::Term;
using rdf::TermKind;

namespace {

struct EvalContext {
  const Graph& graph;
  const Solution& preBindings;
  std::map<const Query*, std::vector<Solution>> subselectCache;
};

std::vector<Solution> evalGroup(EvalContext& ctx, const GroupPattern& group,
                                std::vector<Solution> input);

// --- numeric helpers ------------------------------------------------------

struct Numeric {
  long double value;
  bool isInteger;
};

std::optional<Numeric> asNumeric(const Term& t) {
  if (!t.isLiteral()) return std::nullopt;
  bool integer;
  if (t.datatype() == rdf::vocab::kXsdInteger)
    integer = true;
  else if (t.datatype() == rdf::vocab::kXsdDecimal)
    integer = false;
  else
    return std::nullopt;
  const std::string& lex = t.value();
  if (lex.empty()) return std::nullopt;
  char* end = nullptr;
  long double v = std::strtold(lex.c_str(), &end);
  if (end != lex.c_str() + lex.size()) return std::nullopt;
  return Numeric{v, integer};
}

bool isStringy(const Term& t) {
  return t.isLiteral() && (t.datatype() == rdf::vocab::kXsdString ||
                           t.datatype() == rdf::vocab::kRdfLangString);
}

// --- expression evaluation -------------------------------------------------

// RDFterm-equal: identical terms are equal; numeric literals compare by
// value; literals with an unknown datatype and different lexical forms are
// an error rather than false.
EvalValue termEquals(const Term& a, const Term& b) {
  if (a == b) return Term::booleanLiteral(true);
  if (a.kind() != b.kind()) return Term::booleanLiteral(false);
  if (!a.isLiteral()) return Term::booleanLiteral(false);
  auto na = asNumeric(a), nb = asNumeric(b);
  if (na && nb) return Term::booleanLiteral(na->value == nb->value);
  const bool knownA = isStringy(a) || a.datatype() == rdf::vocab::kXsdBoolean || na;
  const bool knownB = isStringy(b) || b.datatype() == rdf::vocab::kXsdBoolean || nb;
  if (knownA && knownB) return Term::booleanLiteral(false);
  return EvalError{};
}

std::optional<bool> ebvTerm(const Term& t) {
  if (!t.isLiteral()) return std::nullopt;
  if (t.datatype() == rdf::vocab::kXsdBoolean) {
    if (t.value() == "true" || t.value() == "1") return true;
    if (t.value() == "false" || t.value() == "0") return false;
    return std::nullopt;
  }
  if (auto n = asNumeric(t)) return n->value != 0.0L;
  if (isStringy(t)) return !t.value().empty();
  return std::nullopt;
}

}  // namespace

std::optional<bool> effectiveBoolean(const EvalValue& value) {
  if (isError(value)) return std::nullopt;
  return ebvTerm(std::get<Term>(value));
}

EvalValue evalExpr(const Expr& expr, const Solution& solution, const Graph& data) {
  switch (expr.kind) {
    case Expr::Kind::Var: {
      const Term* t = solution.get(expr.var);
      if (!t) return EvalError{};
      return *t;
    }
    case Expr::Kind::Const:
      return expr.constant;
    case Expr::Kind::Bound:
      return Term::booleanLiteral(solution.bound(expr.var));
    case Expr::Kind::Not: {
      auto b = effectiveBoolean(evalExpr(*expr.args[0], solution, data));
      if (!b) return EvalError{};
      return Term::booleanLiteral(!*b);
    }
    case Expr::Kind::And: {
      auto a = effectiveBoolean(evalExpr(*expr.args[0], solution, data));
      auto b = effectiveBoolean(evalExpr(*expr.args[1], solution, data));
      // three-valued: F && x == F even when x errors
      if (a.has_value() && !*a) return Term::booleanLiteral(false);
      if (b.has_value() && !*b) return Term::booleanLiteral(false);
      if (!a || !b) return EvalError{};
      return Term::booleanLiteral(true);
    }
    case Expr::Kind::Or: {
      auto a = effectiveBoolean(evalExpr(*expr.args[0], solution, data));
      auto b = effectiveBoolean(evalExpr(*expr.args[1], solution, data));
      if (a.has_value() && *a) return Term::booleanLiteral(true);
      if (b.has_value() && *b) return Term::booleanLiteral(true);
      if (!a || !b) return EvalError{};
      return Term::booleanLiteral(false);
    }
    case Expr::Kind::If: {
      auto c = effectiveBoolean(evalExpr(*expr.args[0], solution, data));
      if (!c) return EvalError{};
      return evalExpr(*expr.args[*c ? 1 : 2], solution, data);
    }
    case Expr::Kind::Str: {
      EvalValue v = evalExpr(*expr.args[0], solution, data);
      if (isError(v)) return v;
      const Term& t = std::get<Term>(v);
      if (t.isBlank()) return EvalError{};
      return Term::stringLiteral(t.value());
    }
    case Expr::Kind::StrStarts: {
      EvalValue a = evalExpr(*expr.args[0], solution, data);
      EvalValue b = evalExpr(*expr.args[1], solution, data);
      if (isError(a) || isError(b)) return EvalError{};
      const Term& ta = std::get<Term>(a);
      const Term& tb = std::get<Term>(b);
      if (!isStringy(ta) || !isStringy(tb)) return EvalError{};
      return Term::booleanLiteral(ta.value().rfind(tb.value(), 0) == 0);
    }
    case Expr::Kind::IsLiteral: {
      EvalValue v = evalExpr(*expr.args[0], solution, data);
      if (isError(v)) return v;
      return Term::booleanLiteral(std::get<Term>(v).isLiteral());
    }
    case Expr::Kind::Datatype: {
      EvalValue v = evalExpr(*expr.args[0], solution, data);
      if (isError(v)) return v;
      const Term& t = std::get<Term>(v);
      if (!t.isLiteral()) return EvalError{};
      return Term::iri(t.datatype());
    }
    case Expr::Kind::Compare: {
      EvalValue a = evalExpr(*expr.args[0], solution, data);
      EvalValue b = evalExpr(*expr.args[1], solution, data);
      if (isError(a) || isError(b)) return EvalError{};
      const Term& ta = std::get<Term>(a);
      const Term& tb = std::get<Term>(b);
      if (expr.op == Expr::CmpOp::Eq) return termEquals(ta, tb);
      if (expr.op == Expr::CmpOp::Ne) {
        EvalValue eq = termEquals(ta, tb);
        if (isError(eq)) return eq;
        auto v = ebvTerm(std::get<Term>(eq));
        return Term::booleanLiteral(!*v);
      }
      auto na = asNumeric(ta), nb = asNumeric(tb);
      if (!na || !nb) return EvalError{};
      switch (expr.op) {
        case Expr::CmpOp::Lt: return Term::booleanLiteral(na->value < nb->value);
        case Expr::CmpOp::Le: return Term::booleanLiteral(na->value <= nb->value);
        case Expr::CmpOp::Gt: return Term::booleanLiteral(na->value > nb->value);
        case Expr::CmpOp::Ge: return Term::booleanLiteral(na->value >= nb->value);
        default: return EvalError{};
      }
    }
  }
  return EvalError{};
}

std::set<Term> evalPath(const Graph& data, const Term& start, const PathExpr& path) {
  switch (path.kind) {
    case PathExpr::Kind::Predicate: {
      std::set<Term> out;
      if (!start.isLiteral()) {
        for (const Term& o : data.objects(start, path.predicate)) out.insert(o);
      }
      return out;
    }
    case PathExpr::Kind::Sequence: {
      std::set<Term> out;
      for (const Term& mid : evalPath(data, start, *path.left)) {
        auto ends = evalPath(data, mid, *path.right);
        out.insert(ends.begin(), ends.end());
      }
      return out;
    }
    case PathExpr::Kind::ZeroOrMore: {
      std::set<Term> out{start};
      std::vector<Term> frontier{start};
      while (!frontier.empty()) {
        Term cur = frontier.back();
        frontier.pop_back();
        for (const Term& next : evalPath(data, cur, *path.inner)) {
          if (out.insert(next).second) frontier.push_back(next);
        }
      }
      return out;
    }
  }
  return {};
}

namespace {

// --- pattern matching -------------------------------------------------------

std::optional<Solution> bindSlot(const Solution& base, const PatTerm& slot, const Term& actual) {
  if (!slot.isVar) {
    return slot.term == actual ? std::optional<Solution>(base) : std::nullopt;
  }
  if (const Term* existing = base.get(slot.var)) {
    return *existing == actual ? std::optional<Solution>(base) : std::nullopt;
  }
  Solution out = base;
  out.bindings.emplace(slot.var, actual);
  return out;
}

std::optional<Term> resolveSlot(const Solution& solution, const PatTerm& slot) {
  if (!slot.isVar) return slot.term;
  if (const Term* t = solution.get(slot.var)) return *t;
  return std::nullopt;
}

void matchPlainPattern(EvalContext& ctx, const TriplePattern& pattern, const Solution& solution,
                       std::vector<Solution>& out) {
  const PatTerm& predSlot = std::get<PatTerm>(pattern.predicate);
  auto s = resolveSlot(solution, pattern.subject);
  auto p = resolveSlot(solution, predSlot);
  auto o = resolveSlot(solution, pattern.object);
  for (const auto& triple : ctx.graph.match(s, p, o)) {
    auto s1 = bindSlot(solution, pattern.subject, triple.subject);
    if (!s1) continue;
    auto s2 = bindSlot(*s1, predSlot, triple.predicate);
    if (!s2) continue;
    auto s3 = bindSlot(*s2, pattern.object, triple.object);
    if (!s3) continue;
    out.push_back(std::move(*s3));
  }
}

void matchPathPattern(EvalContext& ctx, const TriplePattern& pattern, const Solution& solution,
                      std::vector<Solution>& out) {
  const PathExpr& path = *std::get<std::unique_ptr<PathExpr>>(pattern.predicate);
  auto s = resolveSlot(solution, pattern.subject);

  auto emitFrom = [&](const Term& start, const Solution& base) {
    for (const Term& end : evalPath(ctx.graph, start, path)) {
      if (auto bound = bindSlot(base, pattern.object, end)) out.push_back(std::move(*bound));
    }
  };

  if (s) {
    emitFrom(*s, solution);
    return;
  }
  // Unbound path start ranges over every node in the graph (zero-length
  // closure steps relate any node to itself).
  for (const Term& start : ctx.graph.nodes()) {
    if (auto base = bindSlot(solution, pattern.subject, start)) emitFrom(start, *base);
  }
}

std::vector<Solution> joinLists(const std::vector<Solution>& left,
                                const std::vector<Solution>& right) {
  std::vector<Solution> out;
  for (const Solution& l : left) {
    for (const Solution& r : right) {
      if (l.compatibleWith(r)) out.push_back(l.mergedWith(r));
    }
  }
  return out;
}

std::vector<Solution> applyAggregate(const Query& query, const std::vector<Solution>& rows) {
  const Aggregate& agg = *query.aggregate;
  std::vector<std::string> keyOrder;
  std::map<std::string, std::pair<Solution, long long>> groups;
  for (const Solution& row : rows) {
    std::string key;
    Solution keyBindings;
    for (const std::string& var : agg.groupBy) {
      if (const Term* t = row.get(var)) {
        key += t->toString();
        keyBindings.bindings.emplace(var, *t);
      } else {
        key += "\x01unbound";
      }
      key += "\x02";
    }
    auto [it, inserted] = groups.emplace(key, std::make_pair(keyBindings, 0LL));
    if (inserted) keyOrder.push_back(key);
    if (row.bound(agg.countVar)) it->second.second += 1;
  }
  std::vector<Solution> out;
  for (const std::string& key : keyOrder) {
    auto& [bindings, count] = groups.at(key);
    Solution s = bindings;
    s.bindings.emplace(agg.alias, Term::integerLiteral(count));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Solution> evalQueryInternal(EvalContext& ctx, const Query& query) {
  std::vector<Solution> input{ctx.preBindings};
  std::vector<Solution> rows = evalGroup(ctx, query.where, std::move(input));
  if (query.aggregate) rows = applyAggregate(query, rows);
  // Project.
  std::vector<Solution> out;
  out.reserve(rows.size());
  for (const Solution& row : rows) {
    Solution projected;
    for (const std::string& var : query.projection) {
      if (const Term* t = row.get(var)) projected.bindings.emplace(var, *t);
    }
    out.push_back(std::move(projected));
  }
  return out;
}

const std::vector<Solution>& subselectResults(EvalContext& ctx, const Query& sub) {
  auto it = ctx.subselectCache.find(&sub);
  if (it != ctx.subselectCache.end()) return it->second;
  auto results = evalQueryInternal(ctx, sub);
  return ctx.subselectCache.emplace(&sub, std::move(results)).first->second;
}

std::vector<Solution> evalGroup(EvalContext& ctx, const GroupPattern& group,
                                std::vector<Solution> input) {
  std::vector<Solution> current = std::move(input);
  for (const Element& e : group.elements) {
    if (current.empty()) return current;
    std::vector<Solution> next;
    switch (e.kind) {
      case Element::Kind::Triple: {
        for (const Solution& s : current) {
          if (std::holds_alternative<PatTerm>(e.triple.predicate))
            matchPlainPattern(ctx, e.triple, s, next);
          else
            matchPathPattern(ctx, e.triple, s, next);
        }
        break;
      }
      case Element::Kind::Group: {
        next = evalGroup(ctx, *e.groupA, std::move(current));
        break;
      }
      case Element::Kind::Optional: {
        for (const Solution& s : current) {
          auto extended = evalGroup(ctx, *e.groupA, {s});
          if (extended.empty())
            next.push_back(s);
          else
            next.insert(next.end(), extended.begin(), extended.end());
        }
        break;
      }
      case Element::Kind::Union: {
        auto left = evalGroup(ctx, *e.groupA, current);
        auto right = evalGroup(ctx, *e.groupB, current);
        next = std::move(left);
        next.insert(next.end(), right.begin(), right.end());
        break;
      }
      case Element::Kind::Filter: {
        for (const Solution& s : current) {
          auto b = effectiveBoolean(evalExpr(*e.expr, s, ctx.graph));
          if (b.value_or(false)) next.push_back(s);
        }
        break;
      }
      case Element::Kind::NotExists: {
        for (const Solution& s : current) {
          if (evalGroup(ctx, *e.groupA, {s}).empty()) next.push_back(s);
        }
        break;
      }
      case Element::Kind::Bind: {
        for (const Solution& s : current) {
          EvalValue v = evalExpr(*e.expr, s, ctx.graph);
          if (isError(v)) {
            next.push_back(s);
            continue;
          }
          const Term& t = std::get<Term>(v);
          if (const Term* existing = s.get(e.bindVar)) {
            if (*existing == t) next.push_back(s);
            continue;
          }
          Solution extended = s;
          extended.bindings.emplace(e.bindVar, t);
          next.push_back(std::move(extended));
        }
        break;
      }
      case Element::Kind::SubSelect: {
        next = joinLists(current, subselectResults(ctx, *e.subquery));
        break;
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace

std::vector<Solution> evaluate(const Query& query, const Graph& data,
                               const Solution& preBindings) {
  EvalContext ctx{data, preBindings, {}};
  return evalQueryInternal(ctx, query);
}

}  // namespace intentcheck::sparql
