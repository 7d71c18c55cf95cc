#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace intentcheck::rdf {

/// Well-known namespaces and terms used throughout the engine.
namespace vocab {
inline const std::string kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string kXsdNs = "http://www.w3.org/2001/XMLSchema#";
inline const std::string kShNs = "http://www.w3.org/ns/shacl#";

inline const std::string kRdfType = kRdfNs + "type";
inline const std::string kRdfFirst = kRdfNs + "first";
inline const std::string kRdfRest = kRdfNs + "rest";
inline const std::string kRdfNil = kRdfNs + "nil";
inline const std::string kRdfProperty = kRdfNs + "Property";
inline const std::string kRdfLangString = kRdfNs + "langString";
inline const std::string kRdfResource = kRdfNs + "Resource";

inline const std::string kRdfsClass = kRdfsNs + "Class";
inline const std::string kRdfsSubClassOf = kRdfsNs + "subClassOf";
inline const std::string kRdfsRange = kRdfsNs + "range";
inline const std::string kRdfsDatatype = kRdfsNs + "Datatype";

inline const std::string kXsdString = kXsdNs + "string";
inline const std::string kXsdInteger = kXsdNs + "integer";
inline const std::string kXsdDecimal = kXsdNs + "decimal";
inline const std::string kXsdBoolean = kXsdNs + "boolean";
}  // namespace vocab

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

/// An RDF term: IRI, blank node, or literal. Value type, totally ordered.
///
/// Literals always carry a datatype: plain literals default to xsd:string,
/// language-tagged literals carry rdf:langString. Equality is lexical
/// (lexical form + datatype + language) with no value-space coercion.
class Term {
 public:
  Term() : kind_(TermKind::Iri) {}

  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string datatype);
  static Term stringLiteral(std::string lexical);
  static Term langLiteral(std::string lexical, std::string lang);
  static Term integerLiteral(long long value);
  static Term decimalLiteral(const std::string& lexical);
  static Term booleanLiteral(bool value);

  TermKind kind() const { return kind_; }
  bool isIri() const { return kind_ == TermKind::Iri; }
  bool isBlank() const { return kind_ == TermKind::BlankNode; }
  bool isLiteral() const { return kind_ == TermKind::Literal; }

  /// IRI string, blank node label, or literal lexical form.
  const std::string& value() const { return value_; }
  /// Datatype IRI; empty for non-literals.
  const std::string& datatype() const { return datatype_; }
  /// Language tag; empty unless a language-tagged literal.
  const std::string& lang() const { return lang_; }

  bool operator==(const Term& other) const {
    return kind_ == other.kind_ && value_ == other.value_ &&
           datatype_ == other.datatype_ && lang_ == other.lang_;
  }
  bool operator!=(const Term& other) const { return !(*this == other); }

  /// Canonical total order: IRIs < blank nodes < literals, then fields.
  bool operator<(const Term& other) const;

  /// N-Triples style rendering: <iri>, _:label, "lex"^^<dt>, "lex"@lang.
  std::string toString() const;

  std::uint64_t hash() const;

 private:
  TermKind kind_;
  std::string value_;
  std::string datatype_;
  std::string lang_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return static_cast<std::size_t>(t.hash()); }
};

struct Triple {
  Term subject;    // Iri or BlankNode
  Term predicate;  // Iri
  Term object;

  bool operator==(const Triple& other) const {
    return subject == other.subject && predicate == other.predicate && object == other.object;
  }
  bool operator<(const Triple& other) const;

  std::uint64_t hash() const;
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const { return static_cast<std::size_t>(t.hash()); }
};

/// Stable FNV-1a; used everywhere a run-to-run reproducible hash is needed.
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 1469598103934665603ULL);
std::uint64_t fnv1aCombine(std::uint64_t h, std::uint64_t v);

}  // namespace intentcheck::rdf
