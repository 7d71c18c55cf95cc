#pragma once

#include <random>
#include <string>

#include "intentcheck/graph.hpp"
#include "intentcheck/sparql/parser.hpp"

namespace intentcheck::testsupport {

/// Deterministic generators for the SPARQL oracle-equivalence suite.
struct QueryGen {
  explicit QueryGen(std::uint64_t seed) : rng(seed) {}

  std::mt19937_64 rng;

  int pick(int inclusiveMax) {
    std::uniform_int_distribution<int> d(0, inclusiveMax);
    return d(rng);
  }
  bool chance(double p) {
    std::uniform_real_distribution<double> d(0.0, 1.0);
    return d(rng) < p;
  }

  /// Random graph of at most maxTriples over a small IRI/bnode/literal pool.
  rdf::Graph randomGraph(int maxTriples);

  enum class Flavor { Bgp, BgpFilter, BgpUnion, BgpOptional };

  /// Query text in the dialect; ?v0 always appears in the first required
  /// pattern, so pre-binding properties can anchor on it.
  std::string randomQueryText(Flavor flavor);

  rdf::PrefixMap prefixes() const;

  rdf::Term randomNode();
  rdf::Term randomObject();
};

}  // namespace intentcheck::testsupport
