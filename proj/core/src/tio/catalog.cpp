#include "intentcheck/tio/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace intentcheck::tio {

using rdf::Graph;

const ModuleCatalog* VocabularyCatalog::moduleForIri(const std::string& iri) const {
  const ModuleCatalog* best = nullptr;
  for (const ModuleCatalog& m : modules) {
    if (iri.rfind(m.namespaceIri, 0) == 0 &&
        (!best || m.namespaceIri.size() > best->namespaceIri.size()))
      best = &m;
  }
  return best;
}

const FunctionSignature* VocabularyCatalog::function(const Term& id) const {
  for (const ModuleCatalog& m : modules) {
    auto it = m.functions.find(id);
    if (it != m.functions.end()) return &it->second;
  }
  return nullptr;
}

bool VocabularyCatalog::classDeclared(const Term& id) const {
  for (const ModuleCatalog& m : modules) {
    if (m.classes.count(id)) return true;
  }
  return false;
}

bool VocabularyCatalog::propertyDeclared(const Term& id) const {
  for (const ModuleCatalog& m : modules) {
    if (m.properties.count(id)) return true;
  }
  return false;
}

namespace {

std::optional<long long> integerValue(const Term& t) {
  if (!t.isLiteral() || t.datatype() != rdf::vocab::kXsdInteger) return std::nullopt;
  try {
    return std::stoll(t.value());
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

VocabularyCatalog loadCatalog(const Graph& ontology) {
  VocabularyCatalog catalog;
  const Term rdfType = Term::iri(rdf::vocab::kRdfType);

  // Module manifest entries.
  auto moduleSubjects = ontology.subjects(rdfType, Term::iri(ns::kOntologyModule));
  for (const Term& subject : moduleSubjects) {
    ModuleCatalog module;
    auto names = ontology.objects(subject, Term::iri(ns::kModuleName));
    auto namespaces = ontology.objects(subject, Term::iri(ns::kModuleNamespace));
    if (names.size() != 1 || !names[0].isLiteral() || namespaces.size() != 1 ||
        !namespaces[0].isLiteral())
      throw CatalogError("malformed module manifest entry " + subject.toString());
    module.name = names[0].value();
    module.namespaceIri = namespaces[0].value();
    catalog.modules.push_back(std::move(module));
  }
  if (catalog.modules.empty())
    throw CatalogError("ontology declares no module manifest entries");
  std::sort(catalog.modules.begin(), catalog.modules.end(),
            [](const ModuleCatalog& a, const ModuleCatalog& b) { return a.name < b.name; });

  auto moduleFor = [&](const Term& iri) -> ModuleCatalog* {
    ModuleCatalog* best = nullptr;
    for (ModuleCatalog& m : catalog.modules) {
      if (iri.value().rfind(m.namespaceIri, 0) == 0 &&
          (!best || m.namespaceIri.size() > best->namespaceIri.size()))
        best = &m;
    }
    return best;
  };

  // Functions first, so properties can exclude them.
  std::set<Term> functionIds;
  for (const Term& id : ontology.subjects(rdfType, Term::iri(ns::kFunction))) {
    if (!id.isIri()) continue;
    ModuleCatalog* module = moduleFor(id);
    if (!module) continue;
    FunctionSignature sig;
    sig.id = id;

    auto resultTypes = ontology.objects(id, Term::iri(ns::kResultType));
    if (resultTypes.size() != 1 || !resultTypes[0].isIri())
      throw CatalogError("function " + id.toString() + " needs exactly one fun:resultType IRI");
    sig.resultType = resultTypes[0];

    auto argLists = ontology.objects(id, Term::iri(ns::kArgumentTypes));
    if (argLists.size() > 1)
      throw CatalogError("function " + id.toString() + " declares fun:argumentTypes twice");
    bool argsDeclared = !argLists.empty();
    if (argsDeclared) {
      auto walk = rdf::listToSequence(ontology, argLists[0]);
      if (!walk.ok)
        throw CatalogError("function " + id.toString() + ": " + walk.error);
      sig.argumentTypes = walk.items;
    }

    auto mins = ontology.objects(id, Term::iri(ns::kArityMin));
    auto maxs = ontology.objects(id, Term::iri(ns::kArityMax));
    if (mins.size() > 1 || maxs.size() > 1)
      throw CatalogError("function " + id.toString() + " declares arity bounds more than once");
    bool minDeclared = !mins.empty();
    if (minDeclared) {
      auto v = integerValue(mins[0]);
      if (!v || *v < 0)
        throw CatalogError("function " + id.toString() + " has malformed fun:arityMin");
      sig.arityMin = *v;
    } else {
      sig.arityMin = static_cast<long long>(sig.argumentTypes.size());
    }
    if (!maxs.empty()) {
      auto v = integerValue(maxs[0]);
      if (!v)
        throw CatalogError("function " + id.toString() + " has malformed fun:arityMax");
      sig.arityMax = *v;
    } else if (!minDeclared && argsDeclared) {
      // Fixed arity derived from the signature list.
      sig.arityMax = static_cast<long long>(sig.argumentTypes.size());
    }
    if (sig.arityMax && *sig.arityMax < sig.arityMin)
      throw CatalogError("function " + id.toString() + " has arityMax < arityMin");

    functionIds.insert(id);
    module->functions.emplace(id, std::move(sig));
  }

  for (const Term& id : ontology.subjects(rdfType, Term::iri(rdf::vocab::kRdfsClass))) {
    if (!id.isIri()) continue;
    if (ModuleCatalog* module = moduleFor(id)) module->classes.insert(id);
  }

  for (const Term& id : ontology.subjects(rdfType, Term::iri(rdf::vocab::kRdfProperty))) {
    if (!id.isIri() || functionIds.count(id)) continue;
    if (ModuleCatalog* module = moduleFor(id)) module->properties.insert(id);
  }

  const Term shorthand = Term::iri(ns::kShorthandDatatype);
  for (const auto& t : ontology.match(std::nullopt, shorthand, std::nullopt)) {
    if (!t.subject.isIri() || !t.object.isIri())
      throw CatalogError("fun:shorthandDatatype requires IRI subject and object");
    catalog.shorthandDatatypes[t.subject] = t.object;
  }

  return catalog;
}

std::optional<QuantityValue> parseQuantityLiteral(const std::string& lexical) {
  std::size_t i = 0;
  const std::size_t n = lexical.size();
  if (i < n && (lexical[i] == '+' || lexical[i] == '-')) ++i;
  std::size_t digitsStart = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(lexical[i]))) ++i;
  if (i == digitsStart) return std::nullopt;  // no digits
  if (i < n && lexical[i] == '.') {
    ++i;
    std::size_t fracStart = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(lexical[i]))) ++i;
    if (i == fracStart) return std::nullopt;  // dangling fraction point
  }
  std::size_t unitStart = i;
  while (i < n && (std::isalpha(static_cast<unsigned char>(lexical[i])) || lexical[i] == '%'))
    ++i;
  if (i != n || unitStart == n) return std::nullopt;  // empty unit or trailing junk

  QuantityValue out;
  out.magnitude = std::strtod(lexical.substr(0, unitStart).c_str(), nullptr);
  out.unit = lexical.substr(unitStart);
  return out;
}

}  // namespace intentcheck::tio
