#include "intentcheck/isomorphism.hpp"

#include <algorithm>
#include <vector>

namespace intentcheck::rdf {

namespace {

std::uint64_t stableTermHash(const Term& t,
                             const std::map<std::string, std::uint64_t>& blankHashes) {
  if (t.isBlank()) {
    auto it = blankHashes.find(t.value());
    return it != blankHashes.end() ? it->second : fnv1a("bnode");
  }
  return t.hash();
}

}  // namespace

std::map<std::string, std::uint64_t> canonicalBlankNodeHashes(const Graph& graph) {
  std::map<std::string, std::uint64_t> hashes;
  for (const Triple& t : graph.triples()) {
    if (t.subject.isBlank()) hashes.emplace(t.subject.value(), fnv1a("bnode"));
    if (t.object.isBlank()) hashes.emplace(t.object.value(), fnv1a("bnode"));
  }

  for (int round = 0; round < 3; ++round) {
    std::map<std::string, std::uint64_t> next;
    for (const auto& [label, seed] : hashes) {
      Term node = Term::blank(label);
      std::vector<std::uint64_t> signatures;
      for (const Triple& t : graph.match(node, std::nullopt, std::nullopt)) {
        std::uint64_t h = fnv1a("out");
        h = fnv1aCombine(h, t.predicate.hash());
        h = fnv1aCombine(h, stableTermHash(t.object, hashes));
        signatures.push_back(h);
      }
      for (const Triple& t : graph.match(std::nullopt, std::nullopt, node)) {
        std::uint64_t h = fnv1a("in");
        h = fnv1aCombine(h, t.predicate.hash());
        h = fnv1aCombine(h, stableTermHash(t.subject, hashes));
        signatures.push_back(h);
      }
      std::sort(signatures.begin(), signatures.end());
      std::uint64_t combined = fnv1aCombine(seed, signatures.size());
      for (std::uint64_t s : signatures) combined = fnv1aCombine(combined, s);
      next[label] = combined;
    }
    hashes = std::move(next);
  }
  return hashes;
}

Graph canonicalizeBlankNodes(const Graph& graph) {
  auto hashes = canonicalBlankNodeHashes(graph);
  std::vector<std::pair<std::pair<std::uint64_t, std::string>, std::string>> order;
  order.reserve(hashes.size());
  for (const auto& [label, h] : hashes) order.push_back({{h, label}, label});
  std::sort(order.begin(), order.end());

  std::map<std::string, std::string> rename;
  for (std::size_t i = 0; i < order.size(); ++i)
    rename[order[i].second] = "c" + std::to_string(i);

  auto mapTerm = [&](const Term& t) {
    if (!t.isBlank()) return t;
    return Term::blank(rename.at(t.value()));
  };
  Graph out;
  for (const Triple& t : graph.triples())
    out.insert({mapTerm(t.subject), t.predicate, mapTerm(t.object)});
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  Graph ca = canonicalizeBlankNodes(a);
  Graph cb = canonicalizeBlankNodes(b);
  std::vector<Triple> ta = ca.triples();
  std::vector<Triple> tb = cb.triples();
  std::sort(ta.begin(), ta.end());
  std::sort(tb.begin(), tb.end());
  return ta == tb;
}

}  // namespace intentcheck::rdf
