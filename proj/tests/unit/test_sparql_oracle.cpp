#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute_force.hpp"
#include "generators.hpp"
#include "intentcheck/sparql/eval.hpp"

using namespace intentcheck;
using testsupport::QueryGen;

namespace {

void compareAgainstOracle(std::uint64_t seed, int rounds) {
  QueryGen gen(seed);
  const QueryGen::Flavor flavors[] = {
      QueryGen::Flavor::Bgp,
      QueryGen::Flavor::BgpFilter,
      QueryGen::Flavor::BgpUnion,
      QueryGen::Flavor::BgpOptional,
  };
  for (int round = 0; round < rounds; ++round) {
    rdf::Graph graph = gen.randomGraph(50);
    for (QueryGen::Flavor flavor : flavors) {
      std::string text = gen.randomQueryText(flavor);
      CAPTURE(round);
      CAPTURE(text);
      auto query = sparql::parseQuery(text, gen.prefixes());
      auto actual = sparql::evaluate(*query, graph, {});
      auto expected = testsupport::bruteForceEvaluate(*query, graph, {});
      CHECK(testsupport::solutionMultiset(actual) == testsupport::solutionMultiset(expected));
    }
  }
}

}  // namespace

TEST_CASE("evaluate matches brute-force nested-loop join enumeration") {
  compareAgainstOracle(0x5eed, 60);
}

TEST_CASE("pre-binding equals post-filtering when the variable is required") {
  QueryGen gen(0xabcd);
  for (int round = 0; round < 60; ++round) {
    rdf::Graph graph = gen.randomGraph(40);
    std::string text = gen.randomQueryText(round % 2 == 0 ? QueryGen::Flavor::Bgp
                                                          : QueryGen::Flavor::BgpFilter);
    auto query = sparql::parseQuery(text, gen.prefixes());

    rdf::Term anchor = gen.randomNode();
    sparql::Solution pre;
    pre.bindings.emplace("v0", anchor);
    auto seeded = sparql::evaluate(*query, graph, pre);

    auto open = sparql::evaluate(*query, graph, {});
    std::vector<sparql::Solution> filtered;
    for (const auto& s : open) {
      const rdf::Term* v = s.get("v0");
      if (v && *v == anchor) filtered.push_back(s);
    }
    CAPTURE(text);
    CHECK(testsupport::solutionMultiset(seeded) == testsupport::solutionMultiset(filtered));
  }
}

TEST_CASE("zero-or-more equals iterative frontier expansion to fixpoint") {
  QueryGen gen(0x900d);
  const rdf::Term pred = rdf::Term::iri("http://example.org/p0");
  for (int round = 0; round < 40; ++round) {
    rdf::Graph graph = gen.randomGraph(30);
    rdf::Term start = gen.randomNode();

    auto q = sparql::parseQuery("SELECT ?x WHERE { ?s ex:p0* ?x }", gen.prefixes());
    const auto& path =
        *std::get<std::unique_ptr<sparql::PathExpr>>(q->where.elements[0].triple.predicate);
    auto reached = sparql::evalPath(graph, start, path);

    // Independent fixpoint: expand one edge at a time until stable.
    std::set<rdf::Term> expected{start};
    bool changed = true;
    while (changed) {
      changed = false;
      std::set<rdf::Term> next = expected;
      for (const rdf::Term& node : expected) {
        if (node.isLiteral()) continue;
        for (const rdf::Term& o : graph.objects(node, pred)) {
          if (next.insert(o).second) changed = true;
        }
      }
      expected = next;
    }
    CHECK(reached == expected);
  }
}
