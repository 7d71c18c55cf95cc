#include "intentcheck/tio/oracles.hpp"

#include <algorithm>

#include "intentcheck/turtle.hpp"

namespace intentcheck::tio {

using rdf::Graph;
using rdf::Term;
using shacl::ValidationResult;

namespace {

const Term& rdfType() {
  static const Term t = Term::iri(rdf::vocab::kRdfType);
  return t;
}

bool isBooleanLiteral(const Term& t) {
  return t.isLiteral() && t.datatype() == rdf::vocab::kXsdBoolean;
}

std::optional<long long> integerValue(const Term& t) {
  if (!t.isLiteral() || t.datatype() != rdf::vocab::kXsdInteger) return std::nullopt;
  try {
    return std::stoll(t.value());
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

Oracles::Oracles(const Graph& data, const Graph& ontology, const rdf::PrefixMap& prefixes)
    : prefixes_(prefixes) {
  merged_ = rdf::unionGraphs(data, ontology);
  merged_.freeze();
  empty_.freeze();
}

std::string Oracles::show(const Term& t) const {
  if (t.isLiteral()) return t.value();
  return rdf::renderTerm(t, prefixes_);
}

bool Oracles::typeClosureContains(const Term& node, const Term& cls) const {
  return rdf::typesOf(merged_, node, empty_).count(cls) > 0;
}

bool Oracles::classClosureContains(const Term& cls, const Term& super) const {
  return rdf::superClassesOf(cls, merged_, empty_).count(super) > 0;
}

std::optional<Oracles::Signature> Oracles::functionSignature(const Term& predicate) const {
  if (!typeClosureContains(predicate, Term::iri(ns::kFunction))) return std::nullopt;
  Signature sig;
  auto results = merged_.objects(predicate, Term::iri(ns::kResultType));
  if (!results.empty()) sig.resultType = results.front();
  auto argLists = merged_.objects(predicate, Term::iri(ns::kArgumentTypes));
  if (!argLists.empty()) {
    auto walk = rdf::listToSequence(merged_, argLists.front());
    if (walk.ok) {
      sig.argumentTypes = walk.items;
      sig.hasArgumentTypes = true;
    }
  }
  for (const Term& v : merged_.objects(predicate, Term::iri(ns::kArityMin))) {
    if (auto n = integerValue(v)) {
      sig.arityMin = *n;
      break;
    }
  }
  for (const Term& v : merged_.objects(predicate, Term::iri(ns::kArityMax))) {
    if (auto n = integerValue(v)) {
      sig.arityMax = *n;
      break;
    }
  }
  return sig;
}

std::vector<ValidationResult> Oracles::checkFunctionArity(const Term& focus) const {
  std::vector<ValidationResult> results;
  if (focus.isLiteral()) return results;
  for (const auto& t : merged_.match(focus, std::nullopt, std::nullopt)) {
    auto sig = functionSignature(t.predicate);
    // The arity validator only fires for functions declaring fun:arityMin.
    if (!sig || !sig->arityMin) continue;
    auto walk = rdf::listToSequence(merged_, t.object);
    ValidationResult r;
    r.focusNode = focus;
    r.value = t.object;
    if (!walk.ok) {
      r.message = "Malformed argument list for function " + show(t.predicate) + ": " + walk.error;
      results.push_back(std::move(r));
      continue;
    }
    auto count = static_cast<long long>(walk.items.size());
    if (count < *sig->arityMin || (sig->arityMax && count > *sig->arityMax)) {
      r.message = "Function " + show(t.predicate) + " called with " + std::to_string(count) +
                  " arguments, violating its declared arity.";
      results.push_back(std::move(r));
    }
  }
  std::sort(results.begin(), results.end());
  return results;
}

std::optional<Term> Oracles::inferResultType(const Term& callNode, int depth) const {
  if (depth <= 0 || callNode.isLiteral()) return std::nullopt;
  std::optional<Signature> sig;
  Term argListHead;
  for (const auto& t : merged_.match(callNode, std::nullopt, std::nullopt)) {
    auto s = functionSignature(t.predicate);
    if (!s) continue;
    if (sig) return std::nullopt;  // ambiguous: more than one function predicate
    sig = s;
    argListHead = t.object;
  }
  if (!sig || sig->resultType.value().empty()) return std::nullopt;
  if (!(sig->resultType.value() == rdf::vocab::kRdfResource)) return sig->resultType;

  // Polymorphic accessor: the result type is the rdfs:range of the first
  // argument; a nested call's inferred result flows through unchanged.
  auto firsts = merged_.objects(argListHead, Term::iri(rdf::vocab::kRdfFirst));
  if (firsts.empty()) return std::nullopt;
  const Term& firstArg = firsts.front();
  for (const Term& r : merged_.objects(firstArg, Term::iri(rdf::vocab::kRdfsRange))) {
    if (r.isIri()) return r;
  }
  return inferResultType(firstArg, depth - 1);
}

bool Oracles::argumentSatisfies(const Term& value, const Term& expectedType) const {
  if (expectedType.value() == rdf::vocab::kRdfResource) return true;
  // Typed entity.
  if (typeClosureContains(value, expectedType)) return true;
  // Shorthand literal whose declared class reaches the expected type.
  if (value.isLiteral()) {
    for (const auto& t :
         merged_.match(std::nullopt, Term::iri(ns::kShorthandDatatype), std::nullopt)) {
      if (t.object.isIri() && t.object.value() == value.datatype() &&
          classClosureContains(t.subject, expectedType))
        return true;
    }
    return false;
  }
  // Nested call, one level: concrete result type or polymorphic range.
  for (const auto& t : merged_.match(value, std::nullopt, std::nullopt)) {
    if (!typeClosureContains(t.predicate, Term::iri(ns::kFunction))) continue;
    for (const Term& resultType : merged_.objects(t.predicate, Term::iri(ns::kResultType))) {
      if (!resultType.isIri()) continue;
      if (resultType.value() == rdf::vocab::kRdfResource) {
        auto firsts = merged_.objects(t.object, Term::iri(rdf::vocab::kRdfFirst));
        for (const Term& firstArg : firsts) {
          for (const Term& range :
               merged_.objects(firstArg, Term::iri(rdf::vocab::kRdfsRange))) {
            if (range.isIri() && classClosureContains(range, expectedType)) return true;
          }
        }
      } else if (classClosureContains(resultType, expectedType)) {
        return true;
      }
    }
  }
  return false;
}

std::vector<ValidationResult> Oracles::checkArgumentTypes(const Term& focus) const {
  std::vector<ValidationResult> results;
  if (focus.isLiteral()) return results;
  for (const auto& t : merged_.match(focus, std::nullopt, std::nullopt)) {
    auto sig = functionSignature(t.predicate);
    if (!sig || !sig->hasArgumentTypes || sig->argumentTypes.empty()) continue;
    auto walk = rdf::listToSequence(merged_, t.object);
    if (!walk.ok) continue;  // arity check reports malformed lists
    for (std::size_t i = 0; i < walk.items.size(); ++i) {
      std::size_t slot = std::min(i, sig->argumentTypes.size() - 1);
      const Term& expected = sig->argumentTypes[slot];
      if (!expected.isIri() || expected.value() == rdf::vocab::kRdfResource) continue;
      if (argumentSatisfies(walk.items[i], expected)) continue;
      ValidationResult r;
      r.focusNode = focus;
      r.value = walk.items[i];
      r.message = "Function " + show(t.predicate) + " expects " + show(expected) + ".";
      results.push_back(std::move(r));
    }
  }
  std::sort(results.begin(), results.end());
  results.erase(std::unique(results.begin(), results.end()), results.end());
  return results;
}

std::vector<ValidationResult> Oracles::checkBooleanOperands(const Term& focus) const {
  std::vector<ValidationResult> results;
  if (focus.isLiteral()) return results;
  const Term operatorClass = Term::iri(ns::kLogicalOperator);
  const Term booleanFunction = Term::iri(ns::kBooleanFunction);
  const Term evaluable = Term::iri(ns::kEvaluable);
  for (const auto& t : merged_.match(focus, std::nullopt, std::nullopt)) {
    if (!typeClosureContains(t.predicate, operatorClass)) continue;
    auto walk = rdf::listToSequence(merged_, t.object);
    if (!walk.ok) continue;
    for (const Term& arg : walk.items) {
      bool ok = typeClosureContains(arg, evaluable) || isBooleanLiteral(arg);
      if (!ok && !arg.isLiteral()) {
        for (const auto& nested : merged_.match(arg, std::nullopt, std::nullopt)) {
          if (typeClosureContains(nested.predicate, booleanFunction)) {
            ok = true;
            break;
          }
        }
      }
      if (ok) continue;
      ValidationResult r;
      r.focusNode = focus;
      r.value = arg;
      r.message = "Operator " + show(t.predicate) + " argument " + show(arg) +
                  " is not boolean-evaluable. Expected an Evaluable entity, a boolean "
                  "function call, or a boolean literal.";
      results.push_back(std::move(r));
    }
  }
  std::sort(results.begin(), results.end());
  results.erase(std::unique(results.begin(), results.end()), results.end());
  return results;
}

std::vector<ValidationResult> Oracles::checkActionable(const Term& focus) const {
  std::vector<ValidationResult> results;
  if (focus.isLiteral()) return results;
  if (!typeClosureContains(focus, Term::iri(ns::kActionable))) return results;
  const Term booleanFunction = Term::iri(ns::kBooleanFunction);
  for (const auto& t : merged_.match(focus, std::nullopt, std::nullopt)) {
    if (typeClosureContains(t.predicate, booleanFunction)) return results;
  }
  for (const Term& cls : merged_.objects(focus, rdfType())) {
    ValidationResult r;
    r.focusNode = focus;
    r.message = "Actionable instance of class " + show(cls) +
                " missing BooleanFunction property. Add log:allOf, log:anyOf, etc.";
    results.push_back(std::move(r));
  }
  std::sort(results.begin(), results.end());
  return results;
}

std::vector<ValidationResult> Oracles::checkOperandHierarchy(const Term& focus) const {
  std::vector<ValidationResult> results;
  if (focus.isLiteral()) return results;
  struct Scope {
    Term containerClass;
    Term operandClass;
    std::string containerLabel;
    std::string operandLabel;
    std::string hint;
  };
  const std::vector<Scope> scopes = {
      {Term::iri(ns::kIntent), Term::iri(ns::kIntentOperand), "Intent", "IntentOperand",
       "Wrap Conditions in PropertyExpectation."},
      {Term::iri(ns::kExpectation), Term::iri(ns::kExpectationOperand), "Expectation",
       "ExpectationOperand", "Wrap plain values in Conditions."},
  };
  const Term booleanFunction = Term::iri(ns::kBooleanFunction);
  for (const Scope& scope : scopes) {
    if (!typeClosureContains(focus, scope.containerClass)) continue;
    for (const auto& t : merged_.match(focus, std::nullopt, std::nullopt)) {
      if (!typeClosureContains(t.predicate, booleanFunction)) continue;
      auto walk = rdf::listToSequence(merged_, t.object);
      if (!walk.ok) continue;
      for (const Term& arg : walk.items) {
        if (arg.isLiteral()) continue;
        if (typeClosureContains(arg, scope.operandClass)) continue;
        ValidationResult r;
        r.focusNode = focus;
        r.value = arg;
        r.message = scope.containerLabel + " " + show(focus) + " references non-" +
                    scope.operandLabel + " in " + show(t.predicate) + ". " + scope.hint;
        results.push_back(std::move(r));
      }
    }
  }
  std::sort(results.begin(), results.end());
  results.erase(std::unique(results.begin(), results.end()), results.end());
  return results;
}

std::vector<ValidationResult> Oracles::checkVocabularyUsage(
    const Term& focus, const std::string& namespaceIri) const {
  std::vector<ValidationResult> results;
  if (focus.isLiteral()) return results;
  const Term property = Term::iri(rdf::vocab::kRdfProperty);
  std::set<Term> flagged;
  for (const auto& t : merged_.match(focus, std::nullopt, std::nullopt)) {
    const Term& pred = t.predicate;
    if (pred.value().rfind(namespaceIri, 0) != 0) continue;
    if (merged_.contains({pred, rdfType(), property})) continue;
    if (!flagged.insert(pred).second) continue;
    ValidationResult r;
    r.focusNode = focus;
    r.value = pred;
    r.message =
        "Property " + show(pred) + " is not declared in the ontology vocabulary; possible typo.";
    results.push_back(std::move(r));
  }
  std::sort(results.begin(), results.end());
  return results;
}

std::vector<ValidationResult> Oracles::checkQuantityLiterals(const Term& literalFocus) const {
  std::vector<ValidationResult> results;
  if (!literalFocus.isLiteral() || literalFocus.datatype() != ns::kQuantityDatatype)
    return results;
  if (parseQuantityLiteral(literalFocus.value())) return results;
  ValidationResult r;
  r.focusNode = literalFocus;
  r.value = literalFocus;
  r.message = "Malformed quantity literal \"" + literalFocus.value() +
              "\": expected digits followed by a unit token.";
  results.push_back(std::move(r));
  return results;
}

namespace {
rdf::PrefixMap& emptyPrefixes() {
  static rdf::PrefixMap p;
  return p;
}
}  // namespace

std::vector<ValidationResult> checkFunctionArity(const Graph& data, const Graph& ontology,
                                                 const Term& focus) {
  return Oracles(data, ontology, emptyPrefixes()).checkFunctionArity(focus);
}

std::optional<Term> inferResultType(const Graph& data, const Graph& ontology,
                                    const Term& callNode) {
  return Oracles(data, ontology, emptyPrefixes()).inferResultType(callNode);
}

std::vector<ValidationResult> checkArgumentTypes(const Graph& data, const Graph& ontology,
                                                 const Term& focus) {
  return Oracles(data, ontology, emptyPrefixes()).checkArgumentTypes(focus);
}

std::vector<ValidationResult> checkBooleanOperands(const Graph& data, const Graph& ontology,
                                                   const Term& focus) {
  return Oracles(data, ontology, emptyPrefixes()).checkBooleanOperands(focus);
}

std::vector<ValidationResult> checkActionable(const Graph& data, const Graph& ontology,
                                              const Term& focus) {
  return Oracles(data, ontology, emptyPrefixes()).checkActionable(focus);
}

std::vector<ValidationResult> checkOperandHierarchy(const Graph& data, const Graph& ontology,
                                                    const Term& focus) {
  return Oracles(data, ontology, emptyPrefixes()).checkOperandHierarchy(focus);
}

std::vector<ValidationResult> checkVocabularyUsage(const Graph& data, const Graph& ontology,
                                                   const Term& focus,
                                                   const std::string& namespaceIri) {
  return Oracles(data, ontology, emptyPrefixes()).checkVocabularyUsage(focus, namespaceIri);
}

}  // namespace intentcheck::tio
