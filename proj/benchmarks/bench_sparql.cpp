#include <benchmark/benchmark.h>

#include "intentcheck/harness/workspace.hpp"
#include "intentcheck/sparql/eval.hpp"
#include "intentcheck/sparql/parser.hpp"
#include "intentcheck/tio/catalog.hpp"
#include "intentcheck/turtle.hpp"

using namespace intentcheck;

namespace {

const char* kArityQuery = R"(
SELECT $this ?func ?arityMin ?arityMax ?actualCount
WHERE {
  $this ?func ?argList .
  ?func rdf:type/rdfs:subClassOf* fun:Function .
  ?func fun:arityMin ?arityMin .
  OPTIONAL { ?func fun:arityMax ?arityMax }
  OPTIONAL {
    SELECT ?argList (COUNT(?item) AS ?countFromList)
    WHERE { ?argList rdf:rest*/rdf:first ?item }
    GROUP BY ?argList
  }
  BIND(IF(?argList = rdf:nil, 0, ?countFromList) AS ?actualCount)
  FILTER(?actualCount < ?arityMin ||
    (BOUND(?arityMax) && ?actualCount > ?arityMax))
}
)";

void BM_EvaluateArityQuery(benchmark::State& state) {
  auto ws = harness::loadWorkspace(INTENTCHECK_FIXTURES_DIR, harness::Tier::Af);
  auto parsed = rdf::parseTurtle(harness::readTextFile(
      std::string(INTENTCHECK_FIXTURES_DIR) +
      "/tests/IntentCommonModel/good/icm-good-video-intent.ttl"));
  rdf::Graph merged = rdf::unionGraphs(parsed.graph, ws.ontology);
  merged.freeze();

  auto query = sparql::parseQuery(kArityQuery, ws.prefixes);
  sparql::Solution pre;
  pre.bindings.emplace("this",
                       rdf::Term::iri("https://example.org/intents/ThroughputCond"));
  for (auto _ : state) {
    auto rows = sparql::evaluate(*query, merged, pre);
    benchmark::DoNotOptimize(rows.size());
  }
}
BENCHMARK(BM_EvaluateArityQuery);

}  // namespace
