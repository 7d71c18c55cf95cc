#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "intentcheck/graph.hpp"

namespace intentcheck::tio {

using rdf::Term;

/// Fixture vocabulary namespaces. The tio.example.org root is a stand-in
/// namespace for the fixture ontology, not a normative one.
namespace ns {
inline const std::string kRoot = "https://tio.example.org/v3.6.0/";
inline const std::string kIcm = kRoot + "IntentCommonModel/";
inline const std::string kLog = kRoot + "LogicalOperators/";
inline const std::string kQuan = kRoot + "QuantityOntology/";
inline const std::string kFun = kRoot + "FunctionOntology/";
inline const std::string kMet = kRoot + "MetricsAndObservations/";
inline const std::string kSet = kRoot + "SetOperators/";

inline const std::string kFunction = kFun + "Function";
inline const std::string kResultType = kFun + "resultType";
inline const std::string kArgumentTypes = kFun + "argumentTypes";
inline const std::string kArityMin = kFun + "arityMin";
inline const std::string kArityMax = kFun + "arityMax";
inline const std::string kShorthandDatatype = kFun + "shorthandDatatype";

inline const std::string kBooleanFunction = kFun + "BooleanFunction";
inline const std::string kEvaluable = kFun + "Evaluable";
inline const std::string kActionable = kFun + "Actionable";
inline const std::string kContainerTyped = kFun + "ContainerTyped";

inline const std::string kIntent = kIcm + "Intent";
inline const std::string kExpectation = kIcm + "Expectation";
inline const std::string kIntentOperand = kIcm + "IntentOperand";
inline const std::string kExpectationOperand = kIcm + "ExpectationOperand";

inline const std::string kLogicalOperator = kLog + "LogicalOperator";
inline const std::string kCondition = kLog + "Condition";

inline const std::string kQuantityClass = kQuan + "Quantity";
inline const std::string kQuantityDatatype = kQuan + "quantity";

// Catalog manifest vocabulary (ontology/modules.ttl).
inline const std::string kOntologyModule = kRoot + "OntologyModule";
inline const std::string kModuleName = kRoot + "moduleName";
inline const std::string kModuleNamespace = kRoot + "moduleNamespace";
}  // namespace ns

class CatalogError : public std::runtime_error {
 public:
  explicit CatalogError(const std::string& message) : std::runtime_error(message) {}
};

struct FunctionSignature {
  Term id;
  Term resultType;
  std::vector<Term> argumentTypes;
  long long arityMin = 0;
  std::optional<long long> arityMax;
};

struct ModuleCatalog {
  std::string name;
  std::string namespaceIri;
  std::set<Term> classes;
  std::set<Term> properties;  // declared rdf:Property, excluding functions
  std::map<Term, FunctionSignature> functions;
};

/// Per-module vocabulary inventory built from the ontology graph plus the
/// module manifest it carries. Feeds the spell-checker oracle and the
/// coverage reporter.
struct VocabularyCatalog {
  std::vector<ModuleCatalog> modules;
  std::map<Term, Term> shorthandDatatypes;  // class -> literal datatype

  const ModuleCatalog* moduleForIri(const std::string& iri) const;
  const FunctionSignature* function(const Term& id) const;
  bool classDeclared(const Term& id) const;
  bool propertyDeclared(const Term& id) const;
};

/// Builds the catalog from an ontology graph (baseline plus extensions).
/// Fixed-arity functions derive arityMin/arityMax from the argumentTypes
/// list length unless explicitly overridden; an explicit arityMin without
/// arityMax declares a variadic function.
VocabularyCatalog loadCatalog(const rdf::Graph& ontology);

/// Magnitude plus unit token parsed from a quantity shorthand literal.
struct QuantityValue {
  double magnitude = 0.0;
  std::string unit;

  bool operator==(const QuantityValue& other) const {
    return magnitude == other.magnitude && unit == other.unit;
  }
};

/// Lexical grammar: optional sign, decimal digits with optional fraction,
/// then a non-empty letter-or-percent unit token, no whitespace.
std::optional<QuantityValue> parseQuantityLiteral(const std::string& lexical);

}  // namespace intentcheck::tio
