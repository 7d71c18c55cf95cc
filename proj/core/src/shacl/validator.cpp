#include "intentcheck/shacl/validator.hpp"

#include <algorithm>
#include <regex>

#include "intentcheck/shacl/vocab.hpp"
#include "intentcheck/sparql/eval.hpp"
#include "intentcheck/turtle.hpp"

namespace intentcheck::shacl {

using rdf::Graph;
using rdf::Term;

namespace {

std::optional<long double> numericValue(const Term& t) {
  if (!t.isLiteral()) return std::nullopt;
  if (t.datatype() != rdf::vocab::kXsdInteger && t.datatype() != rdf::vocab::kXsdDecimal)
    return std::nullopt;
  char* end = nullptr;
  long double v = std::strtold(t.value().c_str(), &end);
  if (end != t.value().c_str() + t.value().size() || t.value().empty()) return std::nullopt;
  return v;
}

bool nodeKindMatches(NodeKind kind, const Term& t) {
  switch (kind) {
    case NodeKind::Iri: return t.isIri();
    case NodeKind::BlankNode: return t.isBlank();
    case NodeKind::Literal: return t.isLiteral();
    case NodeKind::BlankNodeOrIri: return t.isBlank() || t.isIri();
    case NodeKind::BlankNodeOrLiteral: return t.isBlank() || t.isLiteral();
    case NodeKind::IriOrLiteral: return t.isIri() || t.isLiteral();
  }
  return false;
}

std::string nodeKindLabel(NodeKind kind) {
  switch (kind) {
    case NodeKind::Iri: return "sh:IRI";
    case NodeKind::BlankNode: return "sh:BlankNode";
    case NodeKind::Literal: return "sh:Literal";
    case NodeKind::BlankNodeOrIri: return "sh:BlankNodeOrIRI";
    case NodeKind::BlankNodeOrLiteral: return "sh:BlankNodeOrLiteral";
    case NodeKind::IriOrLiteral: return "sh:IRIOrLiteral";
  }
  return "sh:IRI";
}

/// Engine state shared by one validateGraph run. Immutable inputs; safe to
/// drive from a single thread per instance.
struct Engine {
  const Graph& data;
  const ShapesGraph& shapes;
  const Graph& ontology;
  Graph merged;  // data + ontology, for SPARQL constraints
  const rdf::PrefixMap& display;

  Engine(const Graph& d, const ShapesGraph& s, const Graph& o, const rdf::PrefixMap& prefixes)
      : data(d), shapes(s), ontology(o), display(prefixes) {
    merged = rdf::unionGraphs(d, o);
    merged.freeze();
  }

  bool conformsToShape(const Term& node, const NodeShape& shape) {
    for (const CoreConstraint& c : shape.constraints) {
      if (!checkCoreConstraint(c, node, {node}, data, ontology, &shapes).empty()) return false;
    }
    for (const PropertyShape& ps : shape.properties) {
      std::vector<Term> values = data.objects(node, ps.path);
      for (const CoreConstraint& c : ps.constraints) {
        if (!checkCoreConstraint(c, node, values, data, ontology, &shapes).empty()) return false;
      }
    }
    return true;
  }
};

// Set per-run by validateGraph so free-function checkCoreConstraint can
// resolve sh:or / sh:and members without threading an engine through.
thread_local Engine* tlsEngine = nullptr;

std::string defaultMessage(const CoreConstraint& c, const rdf::PrefixMap& prefixes,
                           const std::optional<Term>& path, const std::optional<Term>& value,
                           std::size_t valueCount) {
  auto show = [&](const Term& t) { return rdf::renderTerm(t, prefixes); };
  switch (c.kind) {
    case CoreConstraint::Kind::Class:
      return "Value " + (value ? show(*value) : "") + " does not have required class " +
             show(c.term) + ".";
    case CoreConstraint::Kind::Datatype:
      return "Value " + (value ? show(*value) : "") + " does not have datatype " + show(c.term) +
             ".";
    case CoreConstraint::Kind::NodeKind:
      return "Value " + (value ? show(*value) : "") + " is not of node kind " +
             nodeKindLabel(c.nodeKind) + ".";
    case CoreConstraint::Kind::MinCount:
      return "Property " + (path ? show(*path) : "") + " has " + std::to_string(valueCount) +
             " values; at least " + std::to_string(c.count) + " required.";
    case CoreConstraint::Kind::MaxCount:
      return "Property " + (path ? show(*path) : "") + " has " + std::to_string(valueCount) +
             " values; at most " + std::to_string(c.count) + " allowed.";
    case CoreConstraint::Kind::In:
      return "Value " + (value ? show(*value) : "") + " is not one of the allowed values.";
    case CoreConstraint::Kind::Pattern:
      return "Value " + (value ? show(*value) : "") + " does not match pattern \"" + c.pattern +
             "\".";
    case CoreConstraint::Kind::HasValue:
      return "Required value " + show(c.term) + " is missing" +
             (path ? " for property " + show(*path) : "") + ".";
    case CoreConstraint::Kind::MinInclusive:
      return "Value " + (value ? show(*value) : "") + " is less than minimum " + show(c.term) +
             ".";
    case CoreConstraint::Kind::Or:
      return "Value " + (value ? show(*value) : "") +
             " does not conform to any of the alternative shapes.";
    case CoreConstraint::Kind::And:
      return "Value " + (value ? show(*value) : "") +
             " does not conform to all required shapes.";
  }
  return "Constraint violated.";
}

Term coreComponentIri(CoreConstraint::Kind kind) {
  switch (kind) {
    case CoreConstraint::Kind::Class: return Term::iri(sh::kClassComponent);
    case CoreConstraint::Kind::Datatype: return Term::iri(sh::kDatatypeComponent);
    case CoreConstraint::Kind::NodeKind: return Term::iri(sh::kNodeKindComponent);
    case CoreConstraint::Kind::MinCount: return Term::iri(sh::kMinCountComponent);
    case CoreConstraint::Kind::MaxCount: return Term::iri(sh::kMaxCountComponent);
    case CoreConstraint::Kind::In: return Term::iri(sh::kInComponent);
    case CoreConstraint::Kind::Pattern: return Term::iri(sh::kPatternComponent);
    case CoreConstraint::Kind::HasValue: return Term::iri(sh::kHasValueComponent);
    case CoreConstraint::Kind::MinInclusive: return Term::iri(sh::kMinInclusiveComponent);
    case CoreConstraint::Kind::Or: return Term::iri(sh::kOrComponent);
    case CoreConstraint::Kind::And: return Term::iri(sh::kAndComponent);
  }
  return Term::iri(sh::kClassComponent);
}

}  // namespace

std::vector<ValidationResult> checkCoreConstraint(const CoreConstraint& constraint,
                                                  const Term& focus,
                                                  const std::vector<Term>& valueNodes,
                                                  const Graph& data, const Graph& ontology,
                                                  const ShapesGraph* shapes) {
  std::vector<ValidationResult> results;
  rdf::PrefixMap empty;
  const rdf::PrefixMap& prefixes =
      tlsEngine ? tlsEngine->display : (shapes ? shapes->prefixes : empty);

  auto violation = [&](const std::optional<Term>& value) {
    ValidationResult r;
    r.focusNode = focus;
    r.value = value;
    r.sourceConstraint = coreComponentIri(constraint.kind);
    r.message = defaultMessage(constraint, prefixes, std::nullopt, value, valueNodes.size());
    results.push_back(std::move(r));
  };

  auto memberShape = [&](const Term& ref) -> const NodeShape* {
    const ShapesGraph* sg = shapes ? shapes : (tlsEngine ? &tlsEngine->shapes : nullptr);
    if (!sg) throw ValidationError("sh:or/sh:and check requires a shapes graph");
    const NodeShape* member = sg->findShape(ref);
    if (!member)
      throw ValidationError("sh:or/sh:and member " + ref.toString() + " is not a known shape");
    return member;
  };

  auto conformsTo = [&](const Term& node, const NodeShape& shape) {
    if (tlsEngine) return tlsEngine->conformsToShape(node, shape);
    for (const CoreConstraint& c : shape.constraints) {
      if (!checkCoreConstraint(c, node, {node}, data, ontology, shapes).empty()) return false;
    }
    for (const PropertyShape& ps : shape.properties) {
      std::vector<Term> values = data.objects(node, ps.path);
      for (const CoreConstraint& c : ps.constraints) {
        if (!checkCoreConstraint(c, node, values, data, ontology, shapes).empty()) return false;
      }
    }
    return true;
  };

  switch (constraint.kind) {
    case CoreConstraint::Kind::Class: {
      for (const Term& v : valueNodes) {
        if (v.isLiteral() || !rdf::typesOf(data, v, ontology).count(constraint.term))
          violation(v);
      }
      break;
    }
    case CoreConstraint::Kind::Datatype: {
      for (const Term& v : valueNodes) {
        if (!v.isLiteral() || v.datatype() != constraint.term.value()) violation(v);
      }
      break;
    }
    case CoreConstraint::Kind::NodeKind: {
      for (const Term& v : valueNodes) {
        if (!nodeKindMatches(constraint.nodeKind, v)) violation(v);
      }
      break;
    }
    case CoreConstraint::Kind::MinCount: {
      if (static_cast<long long>(valueNodes.size()) < constraint.count) violation(std::nullopt);
      break;
    }
    case CoreConstraint::Kind::MaxCount: {
      if (static_cast<long long>(valueNodes.size()) > constraint.count) violation(std::nullopt);
      break;
    }
    case CoreConstraint::Kind::In: {
      for (const Term& v : valueNodes) {
        if (std::find(constraint.list.begin(), constraint.list.end(), v) ==
            constraint.list.end())
          violation(v);
      }
      break;
    }
    case CoreConstraint::Kind::Pattern: {
      std::regex re(constraint.pattern, std::regex::ECMAScript);
      for (const Term& v : valueNodes) {
        if (v.isBlank()) {
          violation(v);
          continue;
        }
        if (!std::regex_search(v.value(), re)) violation(v);
      }
      break;
    }
    case CoreConstraint::Kind::HasValue: {
      bool found = false;
      for (const Term& v : valueNodes) found |= (v == constraint.term);
      if (!found) violation(std::nullopt);
      break;
    }
    case CoreConstraint::Kind::MinInclusive: {
      auto minimum = numericValue(constraint.term);
      for (const Term& v : valueNodes) {
        auto n = numericValue(v);
        if (!n || !minimum || *n < *minimum) violation(v);
      }
      break;
    }
    case CoreConstraint::Kind::Or: {
      for (const Term& v : valueNodes) {
        bool any = false;
        for (const Term& ref : constraint.shapeRefs) {
          if (conformsTo(v, *memberShape(ref))) {
            any = true;
            break;
          }
        }
        if (!any) violation(v);
      }
      break;
    }
    case CoreConstraint::Kind::And: {
      for (const Term& v : valueNodes) {
        bool all = true;
        for (const Term& ref : constraint.shapeRefs) {
          if (!conformsTo(v, *memberShape(ref))) {
            all = false;
            break;
          }
        }
        if (!all) violation(v);
      }
      break;
    }
  }
  return results;
}

std::string renderMessage(const std::string& messageTemplate, const sparql::Solution& row,
                          const rdf::PrefixMap& prefixes) {
  std::string out;
  std::size_t pos = 0;
  while (pos < messageTemplate.size()) {
    char c = messageTemplate[pos];
    if (c == '{' && pos + 1 < messageTemplate.size() &&
        (messageTemplate[pos + 1] == '?' || messageTemplate[pos + 1] == '$')) {
      auto close = messageTemplate.find('}', pos);
      if (close != std::string::npos) {
        std::string name = messageTemplate.substr(pos + 2, close - pos - 2);
        if (const Term* t = row.get(name)) {
          if (t->isLiteral())
            out += t->value();
          else
            out += rdf::renderTerm(*t, prefixes);
          pos = close + 1;
          continue;
        }
      }
    }
    out += c;
    ++pos;
  }
  return out;
}

std::vector<ValidationResult> evalSparqlConstraint(const SparqlConstraintDef& constraint,
                                                   const Term& focus,
                                                   const Graph& dataAndOntology,
                                                   const rdf::PrefixMap& displayPrefixes,
                                                   const Term& sourceShape, Severity severity) {
  sparql::Solution preBound = constraint.parameterBindings;
  preBound.bindings["this"] = focus;

  std::vector<sparql::Solution> rows;
  try {
    rows = sparql::evaluate(*constraint.query, dataAndOntology, preBound);
  } catch (const std::exception& e) {
    throw ValidationError("SPARQL constraint " + constraint.id.toString() + " on shape " +
                          sourceShape.toString() + " failed: " + e.what() +
                          "\nquery:\n" + constraint.query->text);
  }

  std::vector<ValidationResult> results;
  for (const sparql::Solution& row : rows) {
    ValidationResult r;
    const Term* rowFocus = row.get("this");
    r.focusNode = rowFocus ? *rowFocus : focus;
    if (const Term* path = row.get("path")) {
      if (path->isIri()) r.path = *path;
    }
    if (const Term* value = row.get("value")) r.value = *value;
    r.severity = severity;
    r.sourceShape = sourceShape;
    r.sourceConstraint = constraint.id;
    r.message = renderMessage(constraint.messageTemplate, row, displayPrefixes);
    if (r.message.empty()) r.message = "Constraint " + constraint.id.toString() + " violated.";
    results.push_back(std::move(r));
  }
  return results;
}

std::set<Term> resolveSparqlTargetType(const Target& target, const ShapesGraph& shapes,
                                       const Graph& data) {
  auto it = shapes.targetTypes.find(target.typeId);
  if (it == shapes.targetTypes.end())
    throw ValidationError("unknown target type " + target.typeId.toString());
  const SparqlTargetType& tt = it->second;
  sparql::Solution params;
  for (const ComponentParameter& param : tt.parameters) {
    auto bound = target.params.find(param.name);
    if (bound == target.params.end()) {
      if (!param.optional)
        throw ValidationError("target type " + target.typeId.toString() +
                              ": unbound parameter " + param.name);
      continue;
    }
    params.bindings[param.name] = bound->second.front();
  }
  std::set<Term> out;
  for (const sparql::Solution& row : sparql::evaluate(*tt.query, data, params)) {
    if (const Term* t = row.get("this")) out.insert(*t);
  }
  return out;
}

namespace {

// Class/subjects-of/objects-of targets select nodes asserted in the data
// graph (closure over data plus ontology); SPARQL-based targets evaluate
// over the merged graph, since typing such as function declarations lives
// in the ontology.
std::set<Term> resolveTargetsOver(const NodeShape& shape, const Graph& data,
                                  const ShapesGraph& shapes, const Graph& ontology,
                                  const Graph& merged) {
  std::set<Term> focus;
  const Term rdfType = Term::iri(rdf::vocab::kRdfType);
  for (const Target& target : shape.targets) {
    switch (target.kind) {
      case Target::Kind::Class: {
        for (const Term& cls : rdf::subClassesOf(target.value, data, ontology)) {
          for (const Term& node : data.subjects(rdfType, cls)) focus.insert(node);
        }
        break;
      }
      case Target::Kind::Node:
        focus.insert(target.value);
        break;
      case Target::Kind::SubjectsOf: {
        for (const auto& t : data.match(std::nullopt, target.value, std::nullopt))
          focus.insert(t.subject);
        break;
      }
      case Target::Kind::ObjectsOf: {
        for (const auto& t : data.match(std::nullopt, target.value, std::nullopt))
          focus.insert(t.object);
        break;
      }
      case Target::Kind::Sparql: {
        for (const sparql::Solution& row : sparql::evaluate(*target.query, merged, {})) {
          if (const Term* t = row.get("this")) focus.insert(*t);
        }
        break;
      }
      case Target::Kind::TargetType: {
        auto nodes = resolveSparqlTargetType(target, shapes, merged);
        focus.insert(nodes.begin(), nodes.end());
        break;
      }
    }
  }
  return focus;
}

}  // namespace

std::set<Term> resolveTargets(const NodeShape& shape, const Graph& data,
                              const ShapesGraph& shapes, const Graph& ontology) {
  if (tlsEngine && &tlsEngine->data == &data && &tlsEngine->ontology == &ontology)
    return resolveTargetsOver(shape, data, shapes, ontology, tlsEngine->merged);
  Graph merged = rdf::unionGraphs(data, ontology);
  merged.freeze();
  return resolveTargetsOver(shape, data, shapes, ontology, merged);
}

ValidationReport validateGraph(const Graph& data, const ShapesGraph& shapes,
                               const Graph& ontology, const rdf::PrefixMap* displayPrefixes) {
  const rdf::PrefixMap& display = displayPrefixes ? *displayPrefixes : shapes.prefixes;
  Engine engine(data, shapes, ontology, display);
  tlsEngine = &engine;

  std::set<ValidationResult> collected;
  try {
    for (const NodeShape& shape : shapes.shapes) {
      std::set<Term> focusNodes = resolveTargets(shape, data, shapes, ontology);
      for (const Term& focus : focusNodes) {
        for (const CoreConstraint& c : shape.constraints) {
          for (ValidationResult r :
               checkCoreConstraint(c, focus, {focus}, data, ontology, &shapes)) {
            r.sourceShape = shape.id;
            r.severity = shape.severity;
            if (!shape.messages.empty()) r.message = shape.messages.front();
            collected.insert(std::move(r));
          }
        }
        for (const PropertyShape& ps : shape.properties) {
          std::vector<Term> values = data.objects(focus, ps.path);
          for (const CoreConstraint& c : ps.constraints) {
            for (ValidationResult r :
                 checkCoreConstraint(c, focus, values, data, ontology, &shapes)) {
              r.sourceShape = shape.id;
              r.path = ps.path;
              r.severity = ps.severity;
              if (!ps.messages.empty())
                r.message = ps.messages.front();
              else  // regenerate, now that the path is known
                r.message = defaultMessage(c, display, r.path, r.value, values.size());
              collected.insert(std::move(r));
            }
          }
        }
        for (const SparqlConstraintDef& def : shape.sparqlConstraints) {
          for (ValidationResult r : evalSparqlConstraint(def, focus, engine.merged, display,
                                                         shape.id, shape.severity)) {
            collected.insert(std::move(r));
          }
        }
      }
    }
  } catch (...) {
    tlsEngine = nullptr;
    throw;
  }
  tlsEngine = nullptr;

  ValidationReport report;
  report.results.assign(collected.begin(), collected.end());
  report.conforms = std::none_of(report.results.begin(), report.results.end(),
                                 [](const ValidationResult& r) {
                                   return r.severity == Severity::Violation;
                                 });
  return report;
}

}  // namespace intentcheck::shacl
