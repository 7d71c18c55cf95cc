#include "intentcheck/shacl/loader.hpp"

#include <algorithm>
#include <functional>
#include <regex>
#include <set>

#include "intentcheck/shacl/vocab.hpp"
#include "intentcheck/sparql/parser.hpp"

namespace intentcheck::shacl {

using rdf::Graph;
using rdf::Term;
using rdf::Triple;

std::string severityIri(Severity s) {
  switch (s) {
    case Severity::Info: return sh::kInfo;
    case Severity::Warning: return sh::kWarning;
    case Severity::Violation: return sh::kViolation;
  }
  return sh::kViolation;
}

std::optional<Severity> severityFromIri(const std::string& iri) {
  if (iri == sh::kViolation) return Severity::Violation;
  if (iri == sh::kWarning) return Severity::Warning;
  if (iri == sh::kInfo) return Severity::Info;
  return std::nullopt;
}

bool ValidationResult::operator==(const ValidationResult& other) const {
  return focusNode == other.focusNode && path == other.path && value == other.value &&
         severity == other.severity && sourceShape == other.sourceShape &&
         sourceConstraint == other.sourceConstraint && message == other.message;
}

bool ValidationResult::operator<(const ValidationResult& other) const {
  if (!(focusNode == other.focusNode)) return focusNode < other.focusNode;
  if (!(sourceShape == other.sourceShape)) return sourceShape < other.sourceShape;
  if (path != other.path) return path < other.path;
  if (value != other.value) return value < other.value;
  if (sourceConstraint != other.sourceConstraint) return sourceConstraint < other.sourceConstraint;
  if (message != other.message) return message < other.message;
  return severity < other.severity;
}

namespace {

std::string localName(const std::string& iri) {
  auto hash = iri.find_last_of('#');
  auto slash = iri.find_last_of('/');
  std::size_t cut = std::string::npos;
  if (hash != std::string::npos) cut = hash;
  if (slash != std::string::npos && (cut == std::string::npos || slash > cut)) cut = slash;
  return cut == std::string::npos ? iri : iri.substr(cut + 1);
}

bool inShaclNamespace(const Term& iri) {
  return iri.isIri() && iri.value().rfind(rdf::vocab::kShNs, 0) == 0;
}

std::optional<long long> parseIntegerLiteral(const Term& t) {
  if (!t.isLiteral() || t.datatype() != rdf::vocab::kXsdInteger) return std::nullopt;
  try {
    std::size_t used = 0;
    long long v = std::stoll(t.value(), &used);
    if (used != t.value().size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

class Loader {
 public:
  Loader(const Graph& graph, const rdf::PrefixMap& prefixes) : graph_(graph) {
    result_.prefixes = prefixes;
  }

  ShapesGraph run() {
    loadComponents();
    loadTargetTypes();
    loadNodeShapes();
    checkReferenceCycles();
    return std::move(result_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ShapesError(message); }

  std::string show(const Term& t) const {
    if (t.isIri()) {
      if (auto curie = result_.prefixes.compact(t.value())) return *curie;
      return "<" + t.value() + ">";
    }
    return t.toString();
  }

  Term single(const Term& subject, const std::string& predicate, const std::string& what) {
    auto values = graph_.objects(subject, Term::iri(predicate));
    if (values.size() != 1)
      fail(what + ": expected exactly one value of " + show(Term::iri(predicate)) + " on " +
           show(subject) + ", found " + std::to_string(values.size()));
    return values[0];
  }

  std::optional<Term> optionalSingle(const Term& subject, const std::string& predicate,
                                     const std::string& what) {
    auto values = graph_.objects(subject, Term::iri(predicate));
    if (values.empty()) return std::nullopt;
    if (values.size() > 1)
      fail(what + ": multiple values of " + show(Term::iri(predicate)) + " on " + show(subject));
    return values[0];
  }

  std::shared_ptr<const sparql::Query> parseSelect(const Term& owner, const Term& text) {
    if (!text.isLiteral()) fail("sh:select on " + show(owner) + " must be a string literal");
    try {
      return sparql::parseQuery(text.value(), result_.prefixes);
    } catch (const sparql::QueryError& e) {
      fail("invalid query on " + show(owner) + ": " + e.what());
    }
  }

  std::vector<Term> subjectsOfType(const std::string& typeIri) {
    auto subjects = graph_.subjects(Term::iri(rdf::vocab::kRdfType), Term::iri(typeIri));
    std::sort(subjects.begin(), subjects.end());
    subjects.erase(std::unique(subjects.begin(), subjects.end()), subjects.end());
    return subjects;
  }

  std::vector<ComponentParameter> loadParameters(const Term& owner) {
    std::vector<ComponentParameter> params;
    for (const Term& p : graph_.objects(owner, Term::iri(sh::kParameter))) {
      ComponentParameter param;
      Term path = single(p, sh::kPath, "parameter of " + show(owner));
      if (!path.isIri()) fail("parameter path on " + show(owner) + " must be an IRI");
      param.path = path;
      param.name = localName(path.value());
      if (auto opt = optionalSingle(p, sh::kOptional, "parameter"))
        param.optional = opt->isLiteral() && opt->value() == "true";
      params.push_back(std::move(param));
    }
    std::sort(params.begin(), params.end(),
              [](const ComponentParameter& a, const ComponentParameter& b) {
                return a.path < b.path;
              });
    return params;
  }

  void loadComponents() {
    for (const Term& subject : subjectsOfType(sh::kConstraintComponent)) {
      ConstraintComponent component;
      component.id = subject;
      component.parameters = loadParameters(subject);
      if (component.parameters.empty())
        fail("constraint component " + show(subject) + " declares no parameters");
      Term validator = single(subject, sh::kValidator, "component " + show(subject));
      Term select = single(validator, sh::kSelect, "validator of " + show(subject));
      component.selectText = select.value();
      component.validator = parseSelect(subject, select);
      if (auto msg = optionalSingle(validator, sh::kMessage, "validator message")) {
        if (!msg->isLiteral()) fail("sh:message must be a literal on " + show(subject));
        component.messageTemplate = msg->value();
      }
      result_.components.emplace(subject, std::move(component));
    }
  }

  void loadTargetTypes() {
    for (const Term& subject : subjectsOfType(sh::kSparqlTargetType)) {
      SparqlTargetType targetType;
      targetType.id = subject;
      targetType.parameters = loadParameters(subject);
      Term select = single(subject, sh::kSelect, "target type " + show(subject));
      targetType.selectText = select.value();
      targetType.query = parseSelect(subject, select);
      bool projectsThis = false;
      for (const auto& var : targetType.query->projection) projectsThis |= (var == "this");
      if (!projectsThis)
        fail("target type " + show(subject) + " must project ?this");
      result_.targetTypes.emplace(subject, std::move(targetType));
    }
  }

  Severity parseSeverity(const Term& owner, const Term& value) {
    if (value.isIri()) {
      if (auto s = severityFromIri(value.value())) return *s;
    }
    fail("invalid sh:severity on " + show(owner));
  }

  NodeKind parseNodeKind(const Term& owner, const Term& value) {
    if (value.isIri()) {
      if (value.value() == sh::kIri) return NodeKind::Iri;
      if (value.value() == sh::kBlankNode) return NodeKind::BlankNode;
      if (value.value() == sh::kLiteralKind) return NodeKind::Literal;
      if (value.value() == sh::kBlankNodeOrIri) return NodeKind::BlankNodeOrIri;
      if (value.value() == sh::kBlankNodeOrLiteral) return NodeKind::BlankNodeOrLiteral;
      if (value.value() == sh::kIriOrLiteral) return NodeKind::IriOrLiteral;
    }
    fail("invalid sh:nodeKind on " + show(owner));
  }

  std::vector<Term> shapeList(const Term& owner, const Term& head, const char* what) {
    auto walk = rdf::listToSequence(graph_, head);
    if (!walk.ok) fail(std::string(what) + " on " + show(owner) + ": " + walk.error);
    if (walk.items.empty()) fail(std::string(what) + " on " + show(owner) + " is empty");
    return walk.items;
  }

  /// Returns true when the predicate is a core constraint and appends it.
  bool tryCoreConstraint(const Term& owner, const Term& predicate, const Term& object,
                         std::vector<CoreConstraint>& out, bool isPropertyShape) {
    const std::string& p = predicate.value();
    CoreConstraint c;
    if (p == sh::kClass) {
      if (!object.isIri()) fail("sh:class on " + show(owner) + " must be an IRI");
      c.kind = CoreConstraint::Kind::Class;
      c.term = object;
    } else if (p == sh::kDatatype) {
      if (!object.isIri()) fail("sh:datatype on " + show(owner) + " must be an IRI");
      c.kind = CoreConstraint::Kind::Datatype;
      c.term = object;
    } else if (p == sh::kNodeKind) {
      c.kind = CoreConstraint::Kind::NodeKind;
      c.nodeKind = parseNodeKind(owner, object);
    } else if (p == sh::kMinCount || p == sh::kMaxCount) {
      if (!isPropertyShape)
        fail("cardinality constraint " + show(predicate) + " requires a property shape (on " +
             show(owner) + ")");
      auto n = parseIntegerLiteral(object);
      if (!n)
        fail("malformed shape " + show(owner) + ": " + show(predicate) +
             " expects an integer, got " + object.toString());
      c.kind = p == sh::kMinCount ? CoreConstraint::Kind::MinCount : CoreConstraint::Kind::MaxCount;
      c.count = *n;
    } else if (p == sh::kIn) {
      c.kind = CoreConstraint::Kind::In;
      c.list = shapeList(owner, object, "sh:in list");
    } else if (p == sh::kPattern) {
      if (!object.isLiteral()) fail("sh:pattern on " + show(owner) + " must be a string");
      try {
        std::regex probe(object.value(), std::regex::ECMAScript);
      } catch (const std::regex_error& e) {
        fail("invalid sh:pattern on " + show(owner) + ": " + e.what());
      }
      c.kind = CoreConstraint::Kind::Pattern;
      c.pattern = object.value();
    } else if (p == sh::kHasValue) {
      c.kind = CoreConstraint::Kind::HasValue;
      c.term = object;
    } else if (p == sh::kMinInclusive) {
      if (!object.isLiteral()) fail("sh:minInclusive on " + show(owner) + " must be a literal");
      c.kind = CoreConstraint::Kind::MinInclusive;
      c.term = object;
    } else if (p == sh::kOr || p == sh::kAnd) {
      c.kind = p == sh::kOr ? CoreConstraint::Kind::Or : CoreConstraint::Kind::And;
      c.shapeRefs = shapeList(owner, object, p == sh::kOr ? "sh:or list" : "sh:and list");
      for (const Term& ref : c.shapeRefs) compileReferencedShape(ref);
    } else {
      return false;
    }
    out.push_back(std::move(c));
    return true;
  }

  SparqlConstraintDef loadSparqlConstraint(const Term& owner, const Term& node) {
    SparqlConstraintDef def;
    def.id = node;
    Term select = single(node, sh::kSelect, "sh:sparql constraint on " + show(owner));
    def.query = parseSelect(node, select);
    if (auto msg = optionalSingle(node, sh::kMessage, "constraint message")) {
      if (!msg->isLiteral()) fail("sh:message must be a literal on " + show(node));
      def.messageTemplate = msg->value();
    }
    if (def.messageTemplate.empty())
      fail("sh:sparql constraint " + show(node) + " has no sh:message");
    return def;
  }

  Target loadTargetDeclaration(const Term& owner, const Term& node) {
    Target target;
    auto types = graph_.objects(node, Term::iri(rdf::vocab::kRdfType));
    for (const Term& type : types) {
      if (type.isIri() && type.value() == sh::kSparqlTarget) {
        target.kind = Target::Kind::Sparql;
        Term select = single(node, sh::kSelect, "sh:target on " + show(owner));
        target.query = parseSelect(node, select);
        return target;
      }
      auto it = result_.targetTypes.find(type);
      if (it != result_.targetTypes.end()) {
        target.kind = Target::Kind::TargetType;
        target.typeId = type;
        for (const ComponentParameter& param : it->second.parameters) {
          auto values = graph_.objects(node, param.path);
          if (values.empty()) {
            if (!param.optional)
              fail("target on " + show(owner) + ": missing mandatory parameter " +
                   show(param.path));
            continue;
          }
          if (values.size() > 1)
            fail("target on " + show(owner) + ": multiple values for parameter " +
                 show(param.path));
          target.params[param.name] = values;
        }
        return target;
      }
    }
    fail("sh:target node on " + show(owner) + " has no recognized target type");
  }

  PropertyShape loadPropertyShape(const Term& owner, const Term& node) {
    PropertyShape shape;
    shape.id = node;
    bool sawPath = false;
    for (const Triple& t : graph_.match(node, std::nullopt, std::nullopt)) {
      const Term& p = t.predicate;
      if (p.value() == rdf::vocab::kRdfType) continue;  // sh:PropertyShape typing is optional
      if (!inShaclNamespace(p))
        continue;  // non-SHACL annotations are tolerated on property shapes
      if (p.value() == sh::kPath) {
        if (sawPath) fail("property shape " + show(node) + " has multiple sh:path values");
        if (!t.object.isIri())
          fail("property shape " + show(node) +
               ": only single-predicate IRI paths are supported");
        shape.path = t.object;
        sawPath = true;
        continue;
      }
      if (p.value() == sh::kSeverity) {
        shape.severity = parseSeverity(node, t.object);
        continue;
      }
      if (p.value() == sh::kMessage) {
        if (!t.object.isLiteral()) fail("sh:message must be a literal on " + show(node));
        shape.messages.push_back(t.object.value());
        continue;
      }
      if (tryCoreConstraint(node, p, t.object, shape.constraints, /*isPropertyShape=*/true))
        continue;
      fail("unknown constraint parameter " + show(p) + " on property shape " + show(node) +
           " of " + show(owner));
    }
    if (!sawPath) fail("property shape " + show(node) + " of " + show(owner) + " lacks sh:path");
    std::sort(shape.messages.begin(), shape.messages.end());
    return shape;
  }

  NodeShape compileShapeBody(const Term& subject, bool allowTargets) {
    NodeShape shape;
    shape.id = subject;
    for (const Triple& t : graph_.match(subject, std::nullopt, std::nullopt)) {
      const Term& p = t.predicate;
      const Term& o = t.object;
      if (p.value() == rdf::vocab::kRdfType) {
        if (o.isIri() && o.value() == rdf::vocab::kRdfsClass && allowTargets) {
          Target target;
          target.kind = Target::Kind::Class;
          target.value = subject;
          shape.targets.push_back(std::move(target));
        }
        continue;
      }
      if (!inShaclNamespace(p)) continue;  // component parameters, annotations
      const std::string& pv = p.value();
      if (pv == sh::kTargetClass || pv == sh::kTargetNode || pv == sh::kTargetSubjectsOf ||
          pv == sh::kTargetObjectsOf) {
        Target target;
        if (pv == sh::kTargetClass) {
          target.kind = Target::Kind::Class;
          if (!o.isIri()) fail("sh:targetClass on " + show(subject) + " must be an IRI");
        } else if (pv == sh::kTargetNode) {
          target.kind = Target::Kind::Node;
        } else if (pv == sh::kTargetSubjectsOf) {
          target.kind = Target::Kind::SubjectsOf;
          if (!o.isIri()) fail("sh:targetSubjectsOf on " + show(subject) + " must be an IRI");
        } else {
          target.kind = Target::Kind::ObjectsOf;
          if (!o.isIri()) fail("sh:targetObjectsOf on " + show(subject) + " must be an IRI");
        }
        target.value = o;
        shape.targets.push_back(std::move(target));
        continue;
      }
      if (pv == sh::kTarget) {
        shape.targets.push_back(loadTargetDeclaration(subject, o));
        continue;
      }
      if (pv == sh::kProperty) {
        shape.properties.push_back(loadPropertyShape(subject, o));
        continue;
      }
      if (pv == sh::kSparql) {
        shape.sparqlConstraints.push_back(loadSparqlConstraint(subject, o));
        continue;
      }
      if (pv == sh::kSeverity) {
        shape.severity = parseSeverity(subject, o);
        continue;
      }
      if (pv == sh::kMessage) {
        if (!o.isLiteral()) fail("sh:message must be a literal on " + show(subject));
        shape.messages.push_back(o.value());
        continue;
      }
      if (tryCoreConstraint(subject, p, o, shape.constraints, /*isPropertyShape=*/false))
        continue;
      fail("unknown constraint parameter " + show(p) + " on shape " + show(subject));
    }
    instantiateComponentsFor(shape, subject);
    // Deterministic order within a shape.
    std::sort(shape.properties.begin(), shape.properties.end(),
              [](const PropertyShape& a, const PropertyShape& b) {
                if (!(a.path == b.path)) return a.path < b.path;
                return a.id < b.id;
              });
    std::sort(shape.sparqlConstraints.begin(), shape.sparqlConstraints.end(),
              [](const SparqlConstraintDef& a, const SparqlConstraintDef& b) {
                if (!(a.id == b.id)) return a.id < b.id;
                return a.parameterBindings.bindings < b.parameterBindings.bindings;
              });
    std::sort(shape.messages.begin(), shape.messages.end());
    return shape;
  }

  void instantiateComponentsFor(NodeShape& shape, const Term& subject) {
    for (const auto& [componentId, component] : result_.components) {
      std::map<std::string, std::vector<Term>> boundValues;
      std::string messageOverride;
      bool anyBound = false;
      for (const ComponentParameter& param : component.parameters) {
        auto values = graph_.objects(subject, param.path);
        if (values.empty()) continue;
        anyBound = true;
        // A parameter named ...Message overrides the validator template.
        if (param.name.size() >= 7 &&
            param.name.compare(param.name.size() - 7, 7, "Message") == 0) {
          if (values.size() > 1 || !values[0].isLiteral())
            fail("message parameter " + show(param.path) + " on " + show(subject) +
                 " must be a single string");
          messageOverride = values[0].value();
          continue;
        }
        std::sort(values.begin(), values.end());
        boundValues[param.name] = std::move(values);
      }
      if (!anyBound) continue;
      for (const ComponentParameter& param : component.parameters) {
        bool isMessage = param.name.size() >= 7 &&
                         param.name.compare(param.name.size() - 7, 7, "Message") == 0;
        if (!param.optional && !isMessage && !boundValues.count(param.name))
          fail("shape " + show(subject) + " instantiates component " + show(componentId) +
               " but is missing mandatory parameter " + show(param.path));
      }
      // One instantiation per combination of parameter values.
      std::vector<sparql::Solution> combos{{}};
      for (const auto& [name, values] : boundValues) {
        std::vector<sparql::Solution> expanded;
        for (const sparql::Solution& base : combos) {
          for (const Term& v : values) {
            sparql::Solution s = base;
            s.bindings.emplace(name, v);
            expanded.push_back(std::move(s));
          }
        }
        combos = std::move(expanded);
      }
      for (sparql::Solution& combo : combos) {
        SparqlConstraintDef def;
        def.id = componentId;
        def.query = component.validator;
        def.messageTemplate =
            messageOverride.empty() ? component.messageTemplate : messageOverride;
        def.parameterBindings = std::move(combo);
        if (def.messageTemplate.empty())
          fail("component " + show(componentId) + " has no message template");
        shape.sparqlConstraints.push_back(std::move(def));
      }
    }
  }

  void compileReferencedShape(const Term& ref) {
    if (result_.shapesById.count(ref)) return;
    if (compiling_.count(ref))
      fail("cyclic sh:or/sh:and reference through " + show(ref));
    if (graph_.match(ref, std::nullopt, std::nullopt).empty())
      fail("sh:or/sh:and member " + show(ref) + " has no declaration");
    compiling_.insert(ref);
    NodeShape member = compileShapeBody(ref, /*allowTargets=*/false);
    if (!member.sparqlConstraints.empty())
      fail("sh:or/sh:and member " + show(ref) + " must use core constraints only");
    compiling_.erase(ref);
    result_.shapesById.emplace(ref, std::move(member));
  }

  void loadNodeShapes() {
    for (const Term& subject : subjectsOfType(sh::kNodeShape)) {
      if (compiling_.count(subject)) continue;
      NodeShape shape = compileShapeBody(subject, /*allowTargets=*/true);
      result_.shapesById[subject] = shape;
      result_.shapes.push_back(std::move(shape));
    }
  }

  void checkReferenceCycles() {
    // Load-time DFS over or/and member edges; a cycle is an error.
    std::set<Term> done;
    std::set<Term> inProgress;
    std::function<void(const Term&)> visit = [&](const Term& id) {
      if (done.count(id)) return;
      if (!inProgress.insert(id).second)
        fail("cyclic sh:or/sh:and reference through " + show(id));
      const NodeShape* shape = result_.findShape(id);
      if (shape) {
        auto visitConstraints = [&](const std::vector<CoreConstraint>& cs) {
          for (const CoreConstraint& c : cs) {
            if (c.kind == CoreConstraint::Kind::Or || c.kind == CoreConstraint::Kind::And) {
              for (const Term& ref : c.shapeRefs) visit(ref);
            }
          }
        };
        visitConstraints(shape->constraints);
        for (const PropertyShape& ps : shape->properties) visitConstraints(ps.constraints);
      }
      inProgress.erase(id);
      done.insert(id);
    };
    for (const auto& [id, shape] : result_.shapesById) visit(id);
  }

  const Graph& graph_;
  ShapesGraph result_;
  std::set<Term> compiling_;
};

}  // namespace

ShapesGraph loadShapes(const rdf::Graph& shapesGraph, const rdf::PrefixMap& prefixes) {
  Loader loader(shapesGraph, prefixes);
  return loader.run();
}

SparqlConstraintDef instantiateComponent(const ConstraintComponent& component,
                                         const std::map<std::string, Term>& bindings) {
  for (const ComponentParameter& param : component.parameters) {
    bool isMessage = param.name.size() >= 7 &&
                     param.name.compare(param.name.size() - 7, 7, "Message") == 0;
    if (!param.optional && !isMessage && !bindings.count(param.name))
      throw ShapesError("missing mandatory parameter " + param.name + " for component " +
                        component.id.toString());
  }
  SparqlConstraintDef def;
  def.id = component.id;
  def.query = component.validator;
  def.messageTemplate = component.messageTemplate;
  for (const auto& [name, value] : bindings) def.parameterBindings.bindings.emplace(name, value);
  return def;
}

}  // namespace intentcheck::shacl
