#include <benchmark/benchmark.h>

#include "intentcheck/harness/workspace.hpp"
#include "intentcheck/shacl/validator.hpp"
#include "intentcheck/turtle.hpp"

using namespace intentcheck;

namespace {

void benchmarkTier(benchmark::State& state, harness::Tier tier) {
  auto ws = harness::loadWorkspace(INTENTCHECK_FIXTURES_DIR, tier);
  auto parsed = rdf::parseTurtle(harness::readTextFile(
      std::string(INTENTCHECK_FIXTURES_DIR) +
      "/tests/IntentCommonModel/good/icm-good-video-intent.ttl"));
  parsed.graph.freeze();
  for (auto _ : state) {
    auto report = shacl::validateGraph(parsed.graph, ws.shapes, ws.ontology);
    benchmark::DoNotOptimize(report.conforms);
  }
}

void BM_ValidateIntentAfTier(benchmark::State& state) {
  benchmarkTier(state, harness::Tier::Af);
}
BENCHMARK(BM_ValidateIntentAfTier);

void BM_ValidateIntentSparqlTier(benchmark::State& state) {
  benchmarkTier(state, harness::Tier::Sparql);
}
BENCHMARK(BM_ValidateIntentSparqlTier);

}  // namespace
