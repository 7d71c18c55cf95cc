#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "intentcheck/isomorphism.hpp"
#include "intentcheck/turtle.hpp"

using namespace intentcheck::rdf;

namespace {

const std::string kVideoIntent = R"ttl(
@prefix icm:  <https://tio.example.org/v3.6.0/IntentCommonModel/> .
@prefix log:  <https://tio.example.org/v3.6.0/LogicalOperators/> .
@prefix met:  <https://tio.example.org/v3.6.0/MetricsAndObservations/> .
@prefix quan: <https://tio.example.org/v3.6.0/QuantityOntology/> .
@prefix set:  <https://tio.example.org/v3.6.0/SetOperators/> .
@prefix cfss: <https://example.org/cfss/> .
@prefix dim:  <https://example.org/dimensions/> .
@prefix ex:   <https://example.org/intents/> .

ex:VideoIntent a icm:Intent ;
    log:allOf ( ex:DeliveryExp ex:ThroughputExp ) .

ex:DeliveryExp a icm:DeliveryExpectation ;
    icm:target ex:VideoTarget ;
    icm:deliveryType cfss:VideoCFSS .

ex:VideoTarget a icm:Target ;
    icm:chooseFrom [ set:resourcesOfType ( cfss:VideoCFSS ) ] .

ex:ThroughputCond a log:Condition ;
    quan:atLeast ( [ met:lastValue ( dim:Throughput ) ] "320kbps"^^quan:quantity ) .

ex:ThroughputExp a icm:PropertyExpectation ;
    icm:target ex:VideoTarget ;
    log:allOf ( ex:ThroughputCond ) .
)ttl";

Term iri(const std::string& s) { return Term::iri(s); }

}  // namespace

TEST_CASE("video-intent document parses with collections and nested nodes") {
  auto [graph, prefixes] = parseTurtle(kVideoIntent);

  const std::string icm = "https://tio.example.org/v3.6.0/IntentCommonModel/";
  const std::string log = "https://tio.example.org/v3.6.0/LogicalOperators/";
  const std::string ex = "https://example.org/intents/";

  // (ex:VideoIntent, rdf:type, icm:Intent) is present.
  CHECK(graph.contains({iri(ex + "VideoIntent"), iri(vocab::kRdfType), iri(icm + "Intent")}));

  // match(-, rdf:type, icm:Intent) finds exactly the one intent.
  auto intents = graph.match(std::nullopt, iri(vocab::kRdfType), iri(icm + "Intent"));
  REQUIRE(intents.size() == 1);
  CHECK(intents[0].subject == iri(ex + "VideoIntent"));

  // The 2-element collection under log:allOf walks in order.
  auto heads = graph.objects(iri(ex + "VideoIntent"), iri(log + "allOf"));
  REQUIRE(heads.size() == 1);
  auto walk = listToSequence(graph, heads[0]);
  REQUIRE(walk.ok);
  CHECK(walk.items ==
        std::vector<Term>{iri(ex + "DeliveryExp"), iri(ex + "ThroughputExp")});

  CHECK(prefixes.expand("quan", "atLeast") ==
        "https://tio.example.org/v3.6.0/QuantityOntology/atLeast");
}

TEST_CASE("empty input gives empty graph and prefix map") {
  auto [graph, prefixes] = parseTurtle("");
  CHECK(graph.empty());
  CHECK(prefixes.empty());
}

TEST_CASE("collection of n elements expands to 2n+1 slots") {
  // 1 root triple + n firsts + n rests ending in rdf:nil.
  auto [graph, prefixes] =
      parseTurtle("@prefix ex: <http://example.org/> .\n"
                  "ex:a ex:p ( ex:x ex:y ex:z ) .\n");
  CHECK(graph.size() == 7);
  auto heads = graph.objects(iri("http://example.org/a"), iri("http://example.org/p"));
  REQUIRE(heads.size() == 1);
  auto walk = listToSequence(graph, heads[0]);
  REQUIRE(walk.ok);
  CHECK(walk.items.size() == 3);

  SUBCASE("property holds for random sizes") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 10; ++round) {
      int n = 1 + static_cast<int>(rng() % 9);
      std::string text = "@prefix ex: <http://example.org/> .\nex:a ex:p (";
      for (int i = 0; i < n; ++i) text += " ex:e" + std::to_string(i);
      text += " ) .";
      auto parsed = parseTurtle(text);
      CHECK(parsed.graph.size() == static_cast<std::size_t>(2 * n + 1));
    }
  }

  SUBCASE("empty collection is rdf:nil") {
    auto parsed = parseTurtle("@prefix ex: <http://example.org/> .\nex:a ex:p () .");
    CHECK(parsed.graph.size() == 1);
    CHECK(parsed.graph.triples()[0].object == iri(vocab::kRdfNil));
  }
}

TEST_CASE("literals, datatypes and language tags") {
  auto parsed = parseTurtle(
      "@prefix ex: <http://example.org/> .\n"
      "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
      "ex:a ex:str \"hi\" ; ex:int 42 ; ex:dec 1.5 ; ex:neg -7 ; ex:bool true ;\n"
      "     ex:lang \"hallo\"@de ; ex:typed \"320kbps\"^^ex:quantity ;\n"
      "     ex:esc \"a\\\"b\\\\c\\nd\" .");
  const Graph& g = parsed.graph;
  auto obj = [&](const std::string& p) { return g.objects(iri("http://example.org/a"), iri("http://example.org/" + p)).at(0); };
  CHECK(obj("str") == Term::stringLiteral("hi"));
  CHECK(obj("int") == Term::literal("42", vocab::kXsdInteger));
  CHECK(obj("dec") == Term::literal("1.5", vocab::kXsdDecimal));
  CHECK(obj("neg") == Term::literal("-7", vocab::kXsdInteger));
  CHECK(obj("bool") == Term::literal("true", vocab::kXsdBoolean));
  CHECK(obj("lang") == Term::langLiteral("hallo", "de"));
  CHECK(obj("typed") == Term::literal("320kbps", "http://example.org/quantity"));
  CHECK(obj("esc") == Term::stringLiteral("a\"b\\c\nd"));
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parseTurtle("@prefix ex: <http://example.org/> .\nex:a ex:p ;;; .\n");
    FAIL("expected TurtleError");
  } catch (const TurtleError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  SUBCASE("unbound prefix names the prefix") {
    try {
      parseTurtle("ex:a ex:p ex:o .");
      FAIL("expected TurtleError");
    } catch (const TurtleError& e) {
      CHECK(std::string(e.what()).find("unbound prefix 'ex:'") != std::string::npos);
    }
  }

  SUBCASE("unterminated IRI") {
    CHECK_THROWS_AS(parseTurtle("<http://example.org/a ex:p ex:o ."), TurtleError);
  }

  SUBCASE("multi-line strings are outside the subset") {
    CHECK_THROWS_AS(parseTurtle("@prefix ex: <http://e/> . ex:a ex:p \"a\nb\" ."),
                    TurtleError);
  }
}

TEST_CASE("blank node labels never collide with generated ones") {
  auto parsed = parseTurtle(
      "@prefix ex: <http://example.org/> .\n"
      "_:b0 ex:p ex:x .\n"
      "ex:a ex:q [ ex:r ex:y ] .\n");
  // The anonymous node must not reuse the explicit _:b0 label.
  auto anon = parsed.graph.objects(iri("http://example.org/a"), iri("http://example.org/q"));
  REQUIRE(anon.size() == 1);
  CHECK(anon[0].isBlank());
  CHECK(anon[0].value() != "b0");
}

TEST_CASE("serializer determinism and shape") {
  PrefixMap prefixes;
  prefixes.bind("ex", "http://example.org/");

  SUBCASE("empty graph serializes to the prefix block only") {
    Graph g;
    CHECK(serializeTurtle(g, prefixes) == "@prefix ex: <http://example.org/> .\n");
  }

  SUBCASE("rdf:type renders as the a keyword") {
    Graph g;
    g.insert({iri("http://example.org/a"), iri(vocab::kRdfType), iri("http://example.org/C")});
    std::string out = serializeTurtle(g, prefixes);
    CHECK(out.find("ex:a a ex:C .") != std::string::npos);
  }
}

TEST_CASE("round-trip: parse-serialize-parse is isomorphic") {
  auto checkRoundTrip = [](const std::string& text) {
    auto first = parseTurtle(text);
    std::string serialized = serializeTurtle(first.graph, first.prefixes);
    auto second = parseTurtle(serialized);
    CHECK(isomorphic(first.graph, second.graph));
  };

  checkRoundTrip(kVideoIntent);
  checkRoundTrip(
      "@prefix ex: <http://example.org/> .\n"
      "ex:a ex:p ( ex:x ( ex:y ) 3 \"s\" ) ; ex:q [ ex:r [ ex:s ex:t ] ] .\n");
  checkRoundTrip(
      "@prefix ex: <http://example.org/> .\n"
      "[ ex:p1 ex:v1 , ex:v2 ; ex:p2 \"x\"@en ] .\n");
}

TEST_CASE("isomorphism is invariant under blank relabeling, not structure") {
  auto a = parseTurtle(
      "@prefix ex: <http://e/> . _:x ex:p ex:v . _:x ex:q _:y . _:y ex:p ex:w .");
  auto b = parseTurtle(
      "@prefix ex: <http://e/> . _:n1 ex:p ex:v . _:n1 ex:q _:n2 . _:n2 ex:p ex:w .");
  auto c = parseTurtle(
      "@prefix ex: <http://e/> . _:n1 ex:p ex:w . _:n1 ex:q _:n2 . _:n2 ex:p ex:v .");
  CHECK(isomorphic(a.graph, b.graph));
  CHECK_FALSE(isomorphic(a.graph, c.graph));
  CHECK_FALSE(isomorphic(a.graph, parseTurtle("@prefix ex: <http://e/> . _:x ex:p ex:v .").graph));
}

TEST_CASE("base resolution is simple concatenation") {
  auto parsed = parseTurtle("@base <http://example.org/> .\n<a> <p> <o> .");
  CHECK(parsed.graph.contains(
      {iri("http://example.org/a"), iri("http://example.org/p"), iri("http://example.org/o")}));

  auto viaArg = parseTurtle("<a> <p> <o> .", std::string("http://base.org/"));
  CHECK(viaArg.graph.contains(
      {iri("http://base.org/a"), iri("http://base.org/p"), iri("http://base.org/o")}));

  CHECK_THROWS_AS(parseTurtle("<a> <p> <o> ."), TurtleError);
}
