#pragma once

#include <optional>
#include <vector>

#include "intentcheck/shacl/model.hpp"
#include "intentcheck/tio/catalog.hpp"

namespace intentcheck::tio {

/// Directly callable reference implementations of the fixture constraint
/// components. Each check is a pure function of (data, ontology, focus),
/// reading function signatures and mixin classifications straight from the
/// merged graph exactly as the SPARQL validators do. The test suite
/// cross-checks the SHACL evaluation path against these: for every corpus
/// file, oracle and component must produce identical (focus, value)
/// violation sets.
class Oracles {
 public:
  Oracles(const rdf::Graph& data, const rdf::Graph& ontology, const rdf::PrefixMap& prefixes);

  /// Argument-list length against the declared arity bounds; rdf:nil
  /// counts as zero. A malformed list is a distinct violation naming the
  /// list head (the SPARQL tier cannot detect this case; the corpus keeps
  /// its lists well-formed).
  std::vector<shacl::ValidationResult> checkFunctionArity(const Term& focus) const;

  /// Declared result type when concrete; for the polymorphic resource
  /// type, the rdfs:range of the first argument, following nested calls up
  /// to the depth cap. nullopt means Unknown.
  std::optional<Term> inferResultType(const Term& callNode, int depth = 8) const;

  /// Each argument must satisfy the function's declared argument type:
  /// by type closure, as a shorthand literal, or as a nested call whose
  /// one-level result type resolves. Positional, with the last declared
  /// type repeated for variadic functions.
  std::vector<shacl::ValidationResult> checkArgumentTypes(const Term& focus) const;

  /// Operands of logical operators must be Evaluable, bear a boolean
  /// function, or be boolean literals.
  std::vector<shacl::ValidationResult> checkBooleanOperands(const Term& focus) const;

  /// An Actionable focus must carry at least one predicate whose type
  /// closure contains BooleanFunction.
  std::vector<shacl::ValidationResult> checkActionable(const Term& focus) const;

  /// Intents may only reference IntentOperands in boolean-function lists;
  /// expectations symmetrically require ExpectationOperands.
  std::vector<shacl::ValidationResult> checkOperandHierarchy(const Term& focus) const;

  /// Every predicate on focus inside the namespace must be declared
  /// a rdf:Property ("spell checker").
  std::vector<shacl::ValidationResult> checkVocabularyUsage(const Term& focus,
                                                            const std::string& namespaceIri) const;

  /// Quantity-shorthand literals must match the quantity lexical grammar.
  std::vector<shacl::ValidationResult> checkQuantityLiterals(const Term& literalFocus) const;

  const rdf::Graph& merged() const { return merged_; }

 private:
  /// Declared bounds mirror the validator queries: an absent fun:arityMin
  /// or fun:argumentTypes triple disables the corresponding check.
  struct Signature {
    Term resultType;
    std::vector<Term> argumentTypes;
    bool hasArgumentTypes = false;
    std::optional<long long> arityMin;
    std::optional<long long> arityMax;
  };

  std::optional<Signature> functionSignature(const Term& predicate) const;
  bool typeClosureContains(const Term& node, const Term& cls) const;
  bool classClosureContains(const Term& cls, const Term& super) const;
  bool argumentSatisfies(const Term& value, const Term& expectedType) const;
  std::string show(const Term& t) const;

  const rdf::PrefixMap& prefixes_;
  rdf::Graph merged_;
  rdf::Graph empty_;
};

// Spec-shaped convenience wrappers; each builds the merged graph per call.
std::vector<shacl::ValidationResult> checkFunctionArity(const rdf::Graph& data,
                                                        const rdf::Graph& ontology,
                                                        const Term& focus);
std::optional<Term> inferResultType(const rdf::Graph& data, const rdf::Graph& ontology,
                                    const Term& callNode);
std::vector<shacl::ValidationResult> checkArgumentTypes(const rdf::Graph& data,
                                                        const rdf::Graph& ontology,
                                                        const Term& focus);
std::vector<shacl::ValidationResult> checkBooleanOperands(const rdf::Graph& data,
                                                          const rdf::Graph& ontology,
                                                          const Term& focus);
std::vector<shacl::ValidationResult> checkActionable(const rdf::Graph& data,
                                                     const rdf::Graph& ontology,
                                                     const Term& focus);
std::vector<shacl::ValidationResult> checkOperandHierarchy(const rdf::Graph& data,
                                                           const rdf::Graph& ontology,
                                                           const Term& focus);
std::vector<shacl::ValidationResult> checkVocabularyUsage(const rdf::Graph& data,
                                                          const rdf::Graph& ontology,
                                                          const Term& focus,
                                                          const std::string& namespaceIri);

}  // namespace intentcheck::tio
