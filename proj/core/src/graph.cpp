#include "intentcheck/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace intentcheck::rdf {

void PrefixMap::bind(const std::string& label, const std::string& namespaceIri) {
  bindings_[label] = namespaceIri;
}

bool PrefixMap::has(const std::string& label) const { return bindings_.count(label) > 0; }

std::optional<std::string> PrefixMap::expand(const std::string& label,
                                             const std::string& local) const {
  auto it = bindings_.find(label);
  if (it == bindings_.end()) return std::nullopt;
  return it->second + local;
}

namespace {
bool pnameLocalSafe(const std::string& local) {
  for (char c : local) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.'))
      return false;
  }
  if (!local.empty() && (local.front() == '.' || local.back() == '.')) return false;
  return true;
}
}  // namespace

std::optional<std::string> PrefixMap::compact(const std::string& iri) const {
  const std::string* bestNs = nullptr;
  const std::string* bestLabel = nullptr;
  for (const auto& [label, ns] : bindings_) {
    if (iri.size() >= ns.size() && iri.compare(0, ns.size(), ns) == 0) {
      if (!bestNs || ns.size() > bestNs->size()) {
        bestNs = &ns;
        bestLabel = &label;
      }
    }
  }
  if (!bestNs) return std::nullopt;
  std::string local = iri.substr(bestNs->size());
  if (!pnameLocalSafe(local)) return std::nullopt;
  return *bestLabel + ":" + local;
}

void PrefixMap::merge(const PrefixMap& other) {
  for (const auto& [label, ns] : other.bindings_) bindings_[label] = ns;
}

bool Graph::insert(Triple triple) {
  if (frozen_) throw std::logic_error("insert into frozen graph");
  if (triple.subject.isLiteral())
    throw std::invalid_argument("literal in subject position");
  if (!triple.predicate.isIri())
    throw std::invalid_argument("predicate must be an IRI");
  if (index_.count(triple)) return false;
  auto id = static_cast<std::uint32_t>(triples_.size());
  index_.emplace(triple, id);
  bySubject_[triple.subject].push_back(id);
  byPredicate_[triple.predicate].push_back(id);
  byObject_[triple.object].push_back(id);
  triples_.push_back(std::move(triple));
  return true;
}

void Graph::insertAll(const Graph& other) {
  for (const Triple& t : other.triples_) insert(t);
}

bool Graph::contains(const Triple& triple) const { return index_.count(triple) > 0; }

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  // Pick the smallest bound index, then filter; unindexed scan otherwise.
  const std::vector<std::uint32_t>* candidates = nullptr;
  auto consider = [&](const std::unordered_map<Term, std::vector<std::uint32_t>, TermHash>& idx,
                      const std::optional<Term>& key) {
    if (!key) return true;
    auto it = idx.find(*key);
    if (it == idx.end()) {
      candidates = nullptr;
      return false;
    }
    if (!candidates || it->second.size() < candidates->size()) candidates = &it->second;
    return true;
  };
  if (!consider(bySubject_, s)) return {};
  if (!consider(byPredicate_, p)) return {};
  if (!consider(byObject_, o)) return {};

  std::vector<Triple> out;
  auto matches = [&](const Triple& t) {
    return (!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o);
  };
  if (candidates) {
    for (std::uint32_t id : *candidates) {
      if (matches(triples_[id])) out.push_back(triples_[id]);
    }
  } else {
    for (const Triple& t : triples_) {
      if (matches(t)) out.push_back(t);
    }
  }
  return out;
}

std::vector<Term> Graph::objects(const Term& s, const Term& p) const {
  std::vector<Term> out;
  for (const Triple& t : match(s, p, std::nullopt)) out.push_back(t.object);
  return out;
}

std::vector<Term> Graph::subjects(const Term& p, const Term& o) const {
  std::vector<Term> out;
  for (const Triple& t : match(std::nullopt, p, o)) out.push_back(t.subject);
  return out;
}

std::vector<Term> Graph::subjectList() const {
  std::vector<Term> out;
  std::unordered_set<Term, TermHash> seen;
  for (const Triple& t : triples_) {
    if (seen.insert(t.subject).second) out.push_back(t.subject);
  }
  return out;
}

std::set<Term> Graph::nodes() const {
  std::set<Term> out;
  for (const Triple& t : triples_) {
    out.insert(t.subject);
    out.insert(t.object);
  }
  return out;
}

Graph unionGraphs(const Graph& a, const Graph& b) {
  Graph g;
  g.insertAll(a);
  g.insertAll(b);
  return g;
}

ListWalk listToSequence(const Graph& graph, const Term& head) {
  ListWalk walk;
  const Term nil = Term::iri(vocab::kRdfNil);
  const Term first = Term::iri(vocab::kRdfFirst);
  const Term rest = Term::iri(vocab::kRdfRest);

  Term cur = head;
  std::unordered_set<Term, TermHash> visited;
  while (!(cur == nil)) {
    if (cur.isLiteral()) {
      walk.ok = false;
      walk.error = "list node is a literal: " + cur.toString();
      return walk;
    }
    if (!visited.insert(cur).second) {
      walk.ok = false;
      walk.error = "cycle in list at " + cur.toString();
      return walk;
    }
    auto firsts = graph.objects(cur, first);
    auto rests = graph.objects(cur, rest);
    if (firsts.size() != 1 || rests.size() != 1) {
      walk.ok = false;
      walk.error = "malformed list node " + cur.toString() + " (" +
                   std::to_string(firsts.size()) + " rdf:first, " +
                   std::to_string(rests.size()) + " rdf:rest)";
      return walk;
    }
    walk.items.push_back(firsts[0]);
    cur = rests[0];
  }
  return walk;
}

namespace {
// Fixpoint expansion over rdfs:subClassOf edges in both graphs.
void expandSuperClasses(std::set<Term>& classes, const Graph& graph, const Graph& ontology) {
  const Term sub = Term::iri(vocab::kRdfsSubClassOf);
  std::vector<Term> worklist(classes.begin(), classes.end());
  while (!worklist.empty()) {
    Term cls = worklist.back();
    worklist.pop_back();
    for (const Graph* g : {&graph, &ontology}) {
      for (const Term& super : g->objects(cls, sub)) {
        if (super.isLiteral()) continue;
        if (classes.insert(super).second) worklist.push_back(super);
      }
    }
  }
}
}  // namespace

std::set<Term> typesOf(const Graph& graph, const Term& node, const Graph& ontology) {
  const Term type = Term::iri(vocab::kRdfType);
  std::set<Term> classes;
  if (!node.isLiteral()) {
    for (const Graph* g : {&graph, &ontology}) {
      for (const Term& cls : g->objects(node, type)) {
        if (!cls.isLiteral()) classes.insert(cls);
      }
    }
  }
  expandSuperClasses(classes, graph, ontology);
  return classes;
}

std::set<Term> superClassesOf(const Term& cls, const Graph& graph, const Graph& ontology) {
  std::set<Term> classes{cls};
  expandSuperClasses(classes, graph, ontology);
  return classes;
}

std::set<Term> subClassesOf(const Term& cls, const Graph& graph, const Graph& ontology) {
  const Term sub = Term::iri(vocab::kRdfsSubClassOf);
  std::set<Term> classes{cls};
  std::vector<Term> worklist{cls};
  while (!worklist.empty()) {
    Term cur = worklist.back();
    worklist.pop_back();
    for (const Graph* g : {&graph, &ontology}) {
      for (const Term& child : g->subjects(sub, cur)) {
        if (classes.insert(child).second) worklist.push_back(child);
      }
    }
  }
  return classes;
}

}  // namespace intentcheck::rdf
