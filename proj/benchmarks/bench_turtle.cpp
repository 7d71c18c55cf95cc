#include <benchmark/benchmark.h>

#include "intentcheck/harness/workspace.hpp"
#include "intentcheck/isomorphism.hpp"
#include "intentcheck/turtle.hpp"

using namespace intentcheck;

namespace {

const std::string kIntentFile =
    std::string(INTENTCHECK_FIXTURES_DIR) +
    "/tests/IntentCommonModel/good/icm-good-video-intent.ttl";

void BM_ParseIntentFile(benchmark::State& state) {
  std::string text = harness::readTextFile(kIntentFile);
  for (auto _ : state) {
    auto parsed = rdf::parseTurtle(text);
    benchmark::DoNotOptimize(parsed.graph.size());
  }
}
BENCHMARK(BM_ParseIntentFile);

void BM_SerializeIntentFile(benchmark::State& state) {
  auto parsed = rdf::parseTurtle(harness::readTextFile(kIntentFile));
  for (auto _ : state) {
    std::string out = rdf::serializeTurtle(parsed.graph, parsed.prefixes);
    benchmark::DoNotOptimize(out.size());
  }
}
BENCHMARK(BM_SerializeIntentFile);

void BM_CanonicalizeBlankNodes(benchmark::State& state) {
  auto parsed = rdf::parseTurtle(harness::readTextFile(kIntentFile));
  for (auto _ : state) {
    auto canonical = rdf::canonicalizeBlankNodes(parsed.graph);
    benchmark::DoNotOptimize(canonical.size());
  }
}
BENCHMARK(BM_CanonicalizeBlankNodes);

}  // namespace
