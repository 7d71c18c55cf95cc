#pragma once

#include <string>

#include "intentcheck/term.hpp"

namespace intentcheck::shacl::sh {

inline const std::string& ns() { return rdf::vocab::kShNs; }

inline const std::string kNodeShape = rdf::vocab::kShNs + "NodeShape";
inline const std::string kPropertyShape = rdf::vocab::kShNs + "PropertyShape";
inline const std::string kProperty = rdf::vocab::kShNs + "property";
inline const std::string kPath = rdf::vocab::kShNs + "path";

inline const std::string kTargetClass = rdf::vocab::kShNs + "targetClass";
inline const std::string kTargetNode = rdf::vocab::kShNs + "targetNode";
inline const std::string kTargetSubjectsOf = rdf::vocab::kShNs + "targetSubjectsOf";
inline const std::string kTargetObjectsOf = rdf::vocab::kShNs + "targetObjectsOf";
inline const std::string kTarget = rdf::vocab::kShNs + "target";
inline const std::string kSparqlTarget = rdf::vocab::kShNs + "SPARQLTarget";
inline const std::string kSparqlTargetType = rdf::vocab::kShNs + "SPARQLTargetType";

inline const std::string kClass = rdf::vocab::kShNs + "class";
inline const std::string kDatatype = rdf::vocab::kShNs + "datatype";
inline const std::string kNodeKind = rdf::vocab::kShNs + "nodeKind";
inline const std::string kMinCount = rdf::vocab::kShNs + "minCount";
inline const std::string kMaxCount = rdf::vocab::kShNs + "maxCount";
inline const std::string kIn = rdf::vocab::kShNs + "in";
inline const std::string kPattern = rdf::vocab::kShNs + "pattern";
inline const std::string kHasValue = rdf::vocab::kShNs + "hasValue";
inline const std::string kMinInclusive = rdf::vocab::kShNs + "minInclusive";
inline const std::string kOr = rdf::vocab::kShNs + "or";
inline const std::string kAnd = rdf::vocab::kShNs + "and";

inline const std::string kSparql = rdf::vocab::kShNs + "sparql";
inline const std::string kSparqlConstraint = rdf::vocab::kShNs + "SPARQLConstraint";
inline const std::string kSelect = rdf::vocab::kShNs + "select";
inline const std::string kMessage = rdf::vocab::kShNs + "message";
inline const std::string kSeverity = rdf::vocab::kShNs + "severity";

inline const std::string kConstraintComponent = rdf::vocab::kShNs + "ConstraintComponent";
inline const std::string kParameter = rdf::vocab::kShNs + "parameter";
inline const std::string kOptional = rdf::vocab::kShNs + "optional";
inline const std::string kValidator = rdf::vocab::kShNs + "validator";
inline const std::string kSparqlSelectValidator = rdf::vocab::kShNs + "SPARQLSelectValidator";

inline const std::string kIri = rdf::vocab::kShNs + "IRI";
inline const std::string kBlankNode = rdf::vocab::kShNs + "BlankNode";
inline const std::string kLiteralKind = rdf::vocab::kShNs + "Literal";
inline const std::string kBlankNodeOrIri = rdf::vocab::kShNs + "BlankNodeOrIRI";
inline const std::string kBlankNodeOrLiteral = rdf::vocab::kShNs + "BlankNodeOrLiteral";
inline const std::string kIriOrLiteral = rdf::vocab::kShNs + "IRIOrLiteral";

inline const std::string kViolation = rdf::vocab::kShNs + "Violation";
inline const std::string kWarning = rdf::vocab::kShNs + "Warning";
inline const std::string kInfo = rdf::vocab::kShNs + "Info";

inline const std::string kValidationReport = rdf::vocab::kShNs + "ValidationReport";
inline const std::string kConforms = rdf::vocab::kShNs + "conforms";
inline const std::string kResult = rdf::vocab::kShNs + "result";
inline const std::string kValidationResult = rdf::vocab::kShNs + "ValidationResult";
inline const std::string kFocusNode = rdf::vocab::kShNs + "focusNode";
inline const std::string kResultPath = rdf::vocab::kShNs + "resultPath";
inline const std::string kValue = rdf::vocab::kShNs + "value";
inline const std::string kResultSeverity = rdf::vocab::kShNs + "resultSeverity";
inline const std::string kSourceShape = rdf::vocab::kShNs + "sourceShape";
inline const std::string kSourceConstraint = rdf::vocab::kShNs + "sourceConstraint";
inline const std::string kSourceConstraintComponent =
    rdf::vocab::kShNs + "sourceConstraintComponent";
inline const std::string kResultMessage = rdf::vocab::kShNs + "resultMessage";

// W3C constraint-component IRIs reported for core constraint violations.
inline const std::string kClassComponent = rdf::vocab::kShNs + "ClassConstraintComponent";
inline const std::string kDatatypeComponent = rdf::vocab::kShNs + "DatatypeConstraintComponent";
inline const std::string kNodeKindComponent = rdf::vocab::kShNs + "NodeKindConstraintComponent";
inline const std::string kMinCountComponent = rdf::vocab::kShNs + "MinCountConstraintComponent";
inline const std::string kMaxCountComponent = rdf::vocab::kShNs + "MaxCountConstraintComponent";
inline const std::string kInComponent = rdf::vocab::kShNs + "InConstraintComponent";
inline const std::string kPatternComponent = rdf::vocab::kShNs + "PatternConstraintComponent";
inline const std::string kHasValueComponent = rdf::vocab::kShNs + "HasValueConstraintComponent";
inline const std::string kMinInclusiveComponent =
    rdf::vocab::kShNs + "MinInclusiveConstraintComponent";
inline const std::string kOrComponent = rdf::vocab::kShNs + "OrConstraintComponent";
inline const std::string kAndComponent = rdf::vocab::kShNs + "AndConstraintComponent";

}  // namespace intentcheck::shacl::sh
