#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "intentcheck/term.hpp"

namespace intentcheck::rdf {

/// Prefix label -> namespace IRI bindings from @prefix declarations.
class PrefixMap {
 public:
  void bind(const std::string& label, const std::string& namespaceIri);
  bool has(const std::string& label) const;
  std::optional<std::string> expand(const std::string& label, const std::string& local) const;
  /// Longest-namespace compaction; empty result means no binding applies.
  std::optional<std::string> compact(const std::string& iri) const;
  /// Merge other's bindings into this one (other wins on conflicts).
  void merge(const PrefixMap& other);

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const std::map<std::string, std::string>& bindings() const { return bindings_; }

 private:
  std::map<std::string, std::string> bindings_;
};

/// An indexed RDF triple set with set semantics and stable insertion order.
///
/// Mutation is build-time only: freeze() makes the graph immutable, after
/// which it is safe for concurrent reads from any number of threads.
class Graph {
 public:
  /// Returns false when the triple was already present.
  bool insert(Triple triple);
  void insertAll(const Graph& other);
  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  bool contains(const Triple& triple) const;
  const std::vector<Triple>& triples() const { return triples_; }

  /// Triples matching all bound positions, in insertion order.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const;
  /// Objects of (s, p, *), in insertion order.
  std::vector<Term> objects(const Term& s, const Term& p) const;
  /// Subjects of (*, p, o), in insertion order.
  std::vector<Term> subjects(const Term& p, const Term& o) const;

  /// All distinct subjects, in first-appearance order.
  std::vector<Term> subjectList() const;
  /// All terms appearing in subject or object position (canonical order).
  std::set<Term> nodes() const;

 private:
  std::vector<Triple> triples_;
  std::unordered_map<Triple, std::uint32_t, TripleHash> index_;
  std::unordered_map<Term, std::vector<std::uint32_t>, TermHash> bySubject_;
  std::unordered_map<Term, std::vector<std::uint32_t>, TermHash> byPredicate_;
  std::unordered_map<Term, std::vector<std::uint32_t>, TermHash> byObject_;
  bool frozen_ = false;
};

Graph unionGraphs(const Graph& a, const Graph& b);

/// Result of walking an rdf:first/rdf:rest chain.
struct ListWalk {
  bool ok = true;
  std::vector<Term> items;
  std::string error;  // set when !ok, names the offending node
};

/// Walks an RDF collection from head to rdf:nil. rdf:nil yields the empty
/// sequence. Malformed when a node lacks exactly one rdf:first or rdf:rest,
/// or when the rest-chain cycles.
ListWalk listToSequence(const Graph& graph, const Term& head);

/// Asserted rdf:type classes of node, closed under the rdfs:subClassOf
/// transitive closure computed over graph and ontology together. No
/// domain/range inference.
std::set<Term> typesOf(const Graph& graph, const Term& node, const Graph& ontology);

/// Subclass closure of a single class (includes the class itself).
std::set<Term> superClassesOf(const Term& cls, const Graph& graph, const Graph& ontology);

/// All classes whose closure contains cls (cls itself included).
std::set<Term> subClassesOf(const Term& cls, const Graph& graph, const Graph& ontology);

}  // namespace intentcheck::rdf
