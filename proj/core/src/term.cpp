#include "intentcheck/term.hpp"

#include <cctype>
#include <stdexcept>

namespace intentcheck::rdf {

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t fnv1aCombine(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (i * 8)) & 0xFFu;
    h *= 1099511628211ULL;
  }
  return h;
}

Term Term::iri(std::string value) {
  if (value.empty()) throw std::invalid_argument("IRI must be non-empty");
  for (char c : value) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
      throw std::invalid_argument("IRI must not contain whitespace: " + value);
  }
  Term t;
  t.kind_ = TermKind::Iri;
  t.value_ = std::move(value);
  return t;
}

Term Term::blank(std::string label) {
  if (label.empty()) throw std::invalid_argument("blank node label must be non-empty");
  Term t;
  t.kind_ = TermKind::BlankNode;
  t.value_ = std::move(label);
  return t;
}

Term Term::literal(std::string lexical, std::string datatype) {
  if (datatype.empty()) datatype = vocab::kXsdString;
  Term t;
  t.kind_ = TermKind::Literal;
  t.value_ = std::move(lexical);
  t.datatype_ = std::move(datatype);
  return t;
}

Term Term::stringLiteral(std::string lexical) {
  return literal(std::move(lexical), vocab::kXsdString);
}

Term Term::langLiteral(std::string lexical, std::string lang) {
  Term t;
  t.kind_ = TermKind::Literal;
  t.value_ = std::move(lexical);
  t.datatype_ = vocab::kRdfLangString;
  t.lang_ = std::move(lang);
  return t;
}

Term Term::integerLiteral(long long value) {
  return literal(std::to_string(value), vocab::kXsdInteger);
}

Term Term::decimalLiteral(const std::string& lexical) {
  return literal(lexical, vocab::kXsdDecimal);
}

Term Term::booleanLiteral(bool value) {
  return literal(value ? "true" : "false", vocab::kXsdBoolean);
}

bool Term::operator<(const Term& other) const {
  if (kind_ != other.kind_) return kind_ < other.kind_;
  if (value_ != other.value_) return value_ < other.value_;
  if (datatype_ != other.datatype_) return datatype_ < other.datatype_;
  return lang_ < other.lang_;
}

std::string Term::toString() const {
  switch (kind_) {
    case TermKind::Iri:
      return "<" + value_ + ">";
    case TermKind::BlankNode:
      return "_:" + value_;
    case TermKind::Literal:
      break;
  }
  std::string out = "\"";
  for (char c : value_) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += "\"";
  if (!lang_.empty()) {
    out += "@" + lang_;
  } else if (datatype_ != vocab::kXsdString) {
    out += "^^<" + datatype_ + ">";
  }
  return out;
}

std::uint64_t Term::hash() const {
  std::uint64_t h = fnv1a(value_);
  h = fnv1aCombine(h, static_cast<std::uint64_t>(kind_) + 1);
  h = fnv1a(datatype_, h);
  h = fnv1a(lang_, h);
  return h;
}

bool Triple::operator<(const Triple& other) const {
  if (subject != other.subject) return subject < other.subject;
  if (predicate != other.predicate) return predicate < other.predicate;
  return object < other.object;
}

std::uint64_t Triple::hash() const {
  std::uint64_t h = subject.hash();
  h = fnv1aCombine(h, predicate.hash());
  h = fnv1aCombine(h, object.hash());
  return h;
}

}  // namespace intentcheck::rdf
