#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "intentcheck/sparql/eval.hpp"
#include "intentcheck/sparql/parser.hpp"
#include "intentcheck/turtle.hpp"

using namespace intentcheck;
using rdf::Graph;
using rdf::Term;
using sparql::Query;
using sparql::Solution;

namespace {

rdf::PrefixMap fixturePrefixes() {
  rdf::PrefixMap p;
  p.bind("rdf", rdf::vocab::kRdfNs);
  p.bind("rdfs", rdf::vocab::kRdfsNs);
  p.bind("xsd", rdf::vocab::kXsdNs);
  p.bind("fun", "https://tio.example.org/v3.6.0/FunctionOntology/");
  p.bind("log", "https://tio.example.org/v3.6.0/LogicalOperators/");
  p.bind("icm", "https://tio.example.org/v3.6.0/IntentCommonModel/");
  p.bind("quan", "https://tio.example.org/v3.6.0/QuantityOntology/");
  p.bind("ex", "http://example.org/");
  return p;
}

// Arity validation by RDF list traversal, with the ?badArg-style naming
// some shape authors use.
const std::string kArityQuery = R"(
SELECT $this ?func ?arityMin ?arityMax ?actualCount
WHERE {
  # Match any function call and its declared arity
  $this ?func ?argList .
  ?func a fun:Function ;
        fun:arityMin ?arityMin .
  OPTIONAL { ?func fun:arityMax ?arityMax }
  # Count elements by traversing the RDF list
  OPTIONAL {
    SELECT ?argList (COUNT(?item) AS ?countFromList)
    WHERE { ?argList rdf:rest*/rdf:first ?item }
    GROUP BY ?argList
  }
  # Empty list (rdf:nil) yields no count; treat as 0
  BIND(IF(?argList = rdf:nil, 0, ?countFromList)
       AS ?actualCount)
  # Report if outside [arityMin, arityMax] bounds
  FILTER(?actualCount < ?arityMin ||
    (BOUND(?arityMax) && ?actualCount > ?arityMax))
}
)";

// Recursive boolean operand validation over a flattening path.
const std::string kBooleanQuery = R"(
SELECT $this ?badArg
WHERE {
  $this log:allOf/rdf:rest*/rdf:first ?arg .
  FILTER NOT EXISTS {
    { ?arg a fun:Evaluable }
    UNION
    { ?arg a fun:BooleanFunction }
    UNION
    { FILTER(isLiteral(?arg)
        && datatype(?arg) = xsd:boolean) }
  }
  BIND(?arg AS ?badArg)
}
)";

// Vocabulary spell-checker with a pre-bound namespace parameter.
const std::string kVocabQuery = R"(
SELECT $this ?prop
WHERE {
  $this ?prop ?value .
  FILTER(STRSTARTS(STR(?prop), $ontologyNamespace))
  FILTER NOT EXISTS { ?prop a rdf:Property . }
}
)";

Term ex(const std::string& local) { return Term::iri("http://example.org/" + local); }

int countElements(const sparql::GroupPattern& g, sparql::Element::Kind kind);

int countInElement(const sparql::Element& e, sparql::Element::Kind kind) {
  int n = e.kind == kind ? 1 : 0;
  if (e.groupA) n += countElements(*e.groupA, kind);
  if (e.groupB) n += countElements(*e.groupB, kind);
  if (e.subquery) n += countElements(e.subquery->where, kind);
  return n;
}

int countElements(const sparql::GroupPattern& g, sparql::Element::Kind kind) {
  int n = 0;
  for (const auto& e : g.elements) n += countInElement(e, kind);
  return n;
}

}  // namespace

TEST_CASE("minimal BGP query parses") {
  auto q = sparql::parseQuery("SELECT ?s WHERE { ?s ?p ?o }", fixturePrefixes());
  CHECK(q->projection == std::vector<std::string>{"s"});
  CHECK(q->where.elements.size() == 1);
  CHECK(q->where.elements[0].kind == sparql::Element::Kind::Triple);
  CHECK_FALSE(q->aggregate);
}

TEST_CASE("arity query parses to the expected AST shape") {
  auto q = sparql::parseQuery(kArityQuery, fixturePrefixes());
  CHECK(q->projection ==
        std::vector<std::string>{"this", "func", "arityMin", "arityMax", "actualCount"});
  CHECK(q->preBindable.count("this") == 1);
  CHECK(countElements(q->where, sparql::Element::Kind::Optional) == 2);
  CHECK(countElements(q->where, sparql::Element::Kind::SubSelect) == 1);
  CHECK(countElements(q->where, sparql::Element::Kind::Bind) == 1);
  CHECK(countElements(q->where, sparql::Element::Kind::Filter) == 1);
}

TEST_CASE("boolean operand query contains two unions inside NOT EXISTS") {
  auto q = sparql::parseQuery(kBooleanQuery, fixturePrefixes());
  CHECK(countElements(q->where, sparql::Element::Kind::NotExists) == 1);
  CHECK(countElements(q->where, sparql::Element::Kind::Union) == 2);
}

TEST_CASE("unsupported constructs are named errors") {
  auto expectUnsupported = [&](const std::string& text, const std::string& token) {
    try {
      sparql::parseQuery(text, fixturePrefixes());
      FAIL("expected QueryError for ", token);
    } catch (const sparql::QueryError& e) {
      CHECK(std::string(e.what()).find(token) != std::string::npos);
    }
  };
  expectUnsupported("SELECT ?s WHERE { ?s ?p ?o . MINUS { ?s ?p ?o } }", "MINUS");
  expectUnsupported("SELECT ?s WHERE { SERVICE <http://x> { ?s ?p ?o } }", "SERVICE");
  expectUnsupported("SELECT ?s WHERE { ?s ?p ?o } ORDER BY ?s", "ORDER");
  expectUnsupported("SELECT DISTINCT ?s WHERE { ?s ?p ?o }", "DISTINCT");
  expectUnsupported("SELECT * WHERE { ?s ?p ?o }", "SELECT *");
  expectUnsupported(
      "SELECT ?s (COUNT(?o) AS ?n) WHERE { ?s ?p ?o } GROUP BY ?s",
      "sub-select");
}

TEST_CASE("syntax errors carry a position") {
  try {
    sparql::parseQuery("SELECT ?s WHERE { ?s ?p }", fixturePrefixes());
    FAIL("expected QueryError");
  } catch (const sparql::QueryError& e) {
    CHECK(e.line() >= 1);
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
}

TEST_CASE("evalPath handles closures, sequences and zero steps") {
  auto parsed = rdf::parseTurtle(
      "@prefix ex: <http://example.org/> .\n"
      "ex:holder ex:list ( ex:C1 ) .\n"
      "ex:holder3 ex:list ( ex:a ex:b ex:c ) .\n");
  const Graph& g = parsed.graph;

  auto q = sparql::parseQuery("SELECT ?x WHERE { ?start rdf:rest*/rdf:first ?x }",
                              fixturePrefixes());
  const auto& pattern = q->where.elements[0].triple;
  const auto& path = *std::get<std::unique_ptr<sparql::PathExpr>>(pattern.predicate);

  SUBCASE("single-element list") {
    Term head = g.objects(ex("holder"), ex("list")).at(0);
    auto reached = sparql::evalPath(g, head, path);
    CHECK(reached == std::set<Term>{ex("C1")});
  }

  SUBCASE("zero-or-more includes the start with no edges") {
    auto qz = sparql::parseQuery("SELECT ?x WHERE { ?s ex:p* ?x }", fixturePrefixes());
    const auto& zpath =
        *std::get<std::unique_ptr<sparql::PathExpr>>(qz->where.elements[0].triple.predicate);
    auto reached = sparql::evalPath(g, ex("lonely"), zpath);
    CHECK(reached == std::set<Term>{ex("lonely")});
  }

  SUBCASE("three-element list matches listToSequence") {
    Term head = g.objects(ex("holder3"), ex("list")).at(0);
    auto reached = sparql::evalPath(g, head, path);
    auto walk = rdf::listToSequence(g, head);
    REQUIRE(walk.ok);
    std::set<Term> expected(walk.items.begin(), walk.items.end());
    CHECK(reached == expected);
  }
}

TEST_CASE("expression semantics") {
  Graph g;
  Solution s;
  auto prefixes = fixturePrefixes();
  auto evalIn = [&](const std::string& exprText, const Solution& sol) {
    auto q = sparql::parseQuery("SELECT ?x WHERE { FILTER(" + exprText + ") }", prefixes);
    const auto& e = *q->where.elements[0].expr;
    return sparql::evalExpr(e, sol, g);
  };

  SUBCASE("BOUND on unbound variable is false, never an error") {
    auto v = evalIn("BOUND(?arityMax)", s);
    REQUIRE_FALSE(sparql::isError(v));
    CHECK(std::get<Term>(v) == Term::booleanLiteral(false));
  }

  SUBCASE("IF short-circuits on identity comparison") {
    auto v = evalIn("IF(rdf:nil = rdf:nil, 0, 99)", s);
    REQUIRE_FALSE(sparql::isError(v));
    CHECK(std::get<Term>(v) == Term::integerLiteral(0));
  }

  SUBCASE("STRSTARTS over STR of an IRI") {
    Solution sol;
    sol.bindings.emplace("p",
                         Term::iri("https://tio.example.org/v3.6.0/IntentCommonModel/target"));
    auto v = evalIn(
        "STRSTARTS(STR(?p), \"https://tio.example.org/v3.6.0/IntentCommonModel/\")", sol);
    REQUIRE_FALSE(sparql::isError(v));
    CHECK(std::get<Term>(v) == Term::booleanLiteral(true));

    auto noStr = evalIn("STRSTARTS(?p, \"https\")", sol);
    CHECK(sparql::isError(noStr));
  }

  SUBCASE("unbound operand errors; FILTER treats it as false") {
    CHECK(sparql::isError(evalIn("?missing < 3", s)));
    CHECK(sparql::effectiveBoolean(evalIn("?missing < 3", s)) == std::nullopt);
  }

  SUBCASE("numeric comparison is value-space across integer and decimal") {
    Solution sol;
    sol.bindings.emplace("a", Term::integerLiteral(1));
    sol.bindings.emplace("b", Term::decimalLiteral("1.0"));
    auto v = evalIn("?a = ?b", sol);
    REQUIRE_FALSE(sparql::isError(v));
    CHECK(std::get<Term>(v) == Term::booleanLiteral(true));
  }

  SUBCASE("three-valued logic: false && error is false") {
    auto v = evalIn("BOUND(?nope) && ?missing < 3", s);
    REQUIRE_FALSE(sparql::isError(v));
    CHECK(std::get<Term>(v) == Term::booleanLiteral(false));

    CHECK(sparql::isError(evalIn("?missing < 3 || BOUND(?nope)", s)));
  }

  SUBCASE("datatype and isLiteral") {
    Solution sol;
    sol.bindings.emplace("q", Term::literal("320kbps",
                                            "https://tio.example.org/v3.6.0/QuantityOntology/quantity"));
    auto v = evalIn("datatype(?q) = quan:quantity", sol);
    REQUIRE_FALSE(sparql::isError(v));
    CHECK(std::get<Term>(v) == Term::booleanLiteral(true));
    auto lit = evalIn("isLiteral(?q)", sol);
    CHECK(std::get<Term>(lit) == Term::booleanLiteral(true));
  }
}

TEST_CASE("arity query end-to-end over function calls") {
  auto parsed = rdf::parseTurtle(R"(
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix fun: <https://tio.example.org/v3.6.0/FunctionOntology/> .
@prefix quan: <https://tio.example.org/v3.6.0/QuantityOntology/> .
@prefix ex: <http://example.org/> .

quan:atLeast a fun:Function ; fun:arityMin 2 ; fun:arityMax 2 .
ex:variadic a fun:Function ; fun:arityMin 1 .

ex:goodCall quan:atLeast ( ex:a ex:b ) .
ex:emptyCall ex:variadic ( ) .
ex:longCall ex:variadic ( ex:a ex:b ex:c ex:d ) .
ex:overCall quan:atLeast ( ex:a ex:b ex:c ) .
)");
  const Graph& g = parsed.graph;
  auto q = sparql::parseQuery(kArityQuery, fixturePrefixes());

  auto violationsFor = [&](const std::string& node) {
    Solution pre;
    pre.bindings.emplace("this", ex(node));
    return sparql::evaluate(*q, g, pre);
  };

  // Two arguments against arity [2,2]: zero rows.
  CHECK(violationsFor("goodCall").empty());

  // rdf:nil argument list with arityMin 1: one row with actualCount 0.
  auto emptyRows = violationsFor("emptyCall");
  REQUIRE(emptyRows.size() == 1);
  CHECK(*emptyRows[0].get("actualCount") == Term::integerLiteral(0));

  // Variadic with no arityMax accepts long argument lists.
  CHECK(violationsFor("longCall").empty());

  // Three arguments against arityMax 2.
  auto overRows = violationsFor("overCall");
  REQUIRE(overRows.size() == 1);
  CHECK(*overRows[0].get("actualCount") == Term::integerLiteral(3));
}

TEST_CASE("vocabulary query flags a typo with the namespace pre-bound") {
  auto parsed = rdf::parseTurtle(R"(
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix icm: <https://tio.example.org/v3.6.0/IntentCommonModel/> .
@prefix ex: <http://example.org/> .

icm:target a rdf:Property .
ex:DeliveryExp icm:taget ex:VideoTarget .
ex:DeliveryExp icm:target ex:OtherTarget .
ex:DeliveryExp ex:outside ex:X .
)");
  const Graph& g = parsed.graph;
  auto q = sparql::parseQuery(kVocabQuery, fixturePrefixes());

  Solution pre;
  pre.bindings.emplace("this", ex("DeliveryExp"));
  pre.bindings.emplace(
      "ontologyNamespace",
      Term::stringLiteral("https://tio.example.org/v3.6.0/IntentCommonModel/"));
  auto rows = sparql::evaluate(*q, g, pre);
  REQUIRE(rows.size() == 1);
  CHECK(*rows[0].get("prop") ==
        Term::iri("https://tio.example.org/v3.6.0/IntentCommonModel/taget"));
}

TEST_CASE("boolean operand query accepts the three legal argument kinds") {
  auto parsed = rdf::parseTurtle(R"(
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
@prefix fun: <https://tio.example.org/v3.6.0/FunctionOntology/> .
@prefix log: <https://tio.example.org/v3.6.0/LogicalOperators/> .
@prefix quan: <https://tio.example.org/v3.6.0/QuantityOntology/> .
@prefix ex: <http://example.org/> .

ex:E1 a fun:Evaluable .
quan:atLeast a fun:BooleanFunction .

ex:ok log:allOf ( ex:E1 true quan:atLeast ) .
ex:bad log:allOf ( ex:Mystery ) .
)");
  const Graph& g = parsed.graph;
  auto q = sparql::parseQuery(kBooleanQuery, fixturePrefixes());

  Solution okPre;
  okPre.bindings.emplace("this", ex("ok"));
  CHECK(sparql::evaluate(*q, g, okPre).empty());

  Solution badPre;
  badPre.bindings.emplace("this", ex("bad"));
  auto rows = sparql::evaluate(*q, g, badPre);
  REQUIRE(rows.size() == 1);
  CHECK(*rows[0].get("badArg") == ex("Mystery"));
}

TEST_CASE("any query over an empty graph without pre-bindings is empty") {
  Graph g;
  auto q = sparql::parseQuery("SELECT ?s ?o WHERE { ?s ex:p0 ?o }", fixturePrefixes());
  CHECK(sparql::evaluate(*q, g, {}).empty());
}

TEST_CASE("COUNT sub-select binds exactly the list length") {
  for (int n : {1, 2, 5, 9}) {
    std::string text = "@prefix ex: <http://example.org/> .\nex:call ex:args (";
    for (int i = 0; i < n; ++i) text += " ex:e" + std::to_string(i);
    text += " ) .";
    auto parsed = rdf::parseTurtle(text);
    Term head = parsed.graph.objects(ex("call"), ex("args")).at(0);

    auto q = sparql::parseQuery(
        "SELECT ?n WHERE { ?call ex:args ?list . "
        "{ SELECT ?list (COUNT(?item) AS ?n) WHERE { ?list rdf:rest*/rdf:first ?item } "
        "GROUP BY ?list } }",
        fixturePrefixes());
    auto rows = sparql::evaluate(*q, parsed.graph, {});
    REQUIRE(rows.size() == 1);
    CHECK(*rows[0].get("n") == Term::integerLiteral(n));
  }
}
