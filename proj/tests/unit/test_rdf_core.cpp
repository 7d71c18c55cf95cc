#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "intentcheck/graph.hpp"
#include "intentcheck/term.hpp"

using namespace intentcheck::rdf;

namespace {
Term ex(const std::string& local) { return Term::iri("http://example.org/" + local); }
}  // namespace

TEST_CASE("term invariants") {
  CHECK_THROWS_AS(Term::iri(""), std::invalid_argument);
  CHECK_THROWS_AS(Term::iri("http://example.org/a b"), std::invalid_argument);
  CHECK_THROWS_AS(Term::blank(""), std::invalid_argument);

  // Plain literals default to xsd:string; language tags carry rdf:langString.
  CHECK(Term::stringLiteral("x").datatype() == vocab::kXsdString);
  CHECK(Term::langLiteral("x", "en").datatype() == vocab::kRdfLangString);

  // Lexical equality: no value-space coercion at this layer.
  CHECK(Term::integerLiteral(1) == Term::literal("1", vocab::kXsdInteger));
  CHECK(Term::literal("1", vocab::kXsdInteger) != Term::literal("1.0", vocab::kXsdDecimal));
  CHECK(Term::literal("1.0", vocab::kXsdDecimal) != Term::literal("1.00", vocab::kXsdDecimal));
  CHECK(Term::langLiteral("x", "en") != Term::langLiteral("x", "de"));
}

TEST_CASE("graph set semantics and position invariants") {
  Graph g;
  CHECK(g.insert({ex("s"), ex("p"), ex("o")}));
  CHECK_FALSE(g.insert({ex("s"), ex("p"), ex("o")}));
  CHECK(g.size() == 1);

  CHECK_THROWS_AS(g.insert({Term::stringLiteral("lit"), ex("p"), ex("o")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(g.insert({ex("s"), Term::blank("b"), ex("o")}), std::invalid_argument);

  g.freeze();
  CHECK_THROWS_AS(g.insert({ex("s2"), ex("p"), ex("o")}), std::logic_error);
}

TEST_CASE("match returns exactly what a linear scan returns") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 25; ++round) {
    Graph g;
    auto node = [&](int i) { return ex("n" + std::to_string(i)); };
    int n = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) {
      g.insert({node(static_cast<int>(rng() % 6)), node(static_cast<int>(rng() % 3)),
                node(static_cast<int>(rng() % 6))});
    }
    for (int probe = 0; probe < 10; ++probe) {
      std::optional<Term> s, p, o;
      if (rng() % 2) s = node(static_cast<int>(rng() % 6));
      if (rng() % 2) p = node(static_cast<int>(rng() % 3));
      if (rng() % 2) o = node(static_cast<int>(rng() % 6));
      std::vector<Triple> scan;
      for (const Triple& t : g.triples()) {
        if ((!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o))
          scan.push_back(t);
      }
      CHECK(g.match(s, p, o) == scan);
    }
  }
}

TEST_CASE("match with all positions unbound returns every triple once") {
  Graph g;
  g.insert({ex("a"), ex("p"), ex("b")});
  g.insert({ex("b"), ex("p"), ex("c")});
  g.insert({ex("a"), ex("q"), Term::stringLiteral("x")});
  auto all = g.match(std::nullopt, std::nullopt, std::nullopt);
  CHECK(all == g.triples());
  CHECK(all.size() == 3);
}

TEST_CASE("listToSequence walks collections") {
  const Term first = Term::iri(vocab::kRdfFirst);
  const Term rest = Term::iri(vocab::kRdfRest);
  const Term nil = Term::iri(vocab::kRdfNil);

  Graph g;
  Term c0 = Term::blank("c0"), c1 = Term::blank("c1");
  g.insert({c0, first, ex("DeliveryExp")});
  g.insert({c0, rest, c1});
  g.insert({c1, first, ex("ThroughputExp")});
  g.insert({c1, rest, nil});

  auto walk = listToSequence(g, c0);
  REQUIRE(walk.ok);
  CHECK(walk.items == std::vector<Term>{ex("DeliveryExp"), ex("ThroughputExp")});

  SUBCASE("rdf:nil yields the empty sequence") {
    auto empty = listToSequence(g, nil);
    CHECK(empty.ok);
    CHECK(empty.items.empty());
  }

  SUBCASE("cyclic rest chain is malformed") {
    Graph cyc;
    Term c = Term::blank("c");
    cyc.insert({c, first, ex("x")});
    cyc.insert({c, rest, c});
    auto bad = listToSequence(cyc, c);
    CHECK_FALSE(bad.ok);
    CHECK(bad.error.find("cycle") != std::string::npos);
  }

  SUBCASE("node lacking exactly one first/rest is malformed") {
    Graph dup;
    Term c = Term::blank("c");
    dup.insert({c, first, ex("x")});
    dup.insert({c, first, ex("y")});
    dup.insert({c, rest, nil});
    CHECK_FALSE(listToSequence(dup, c).ok);

    Graph missing;
    missing.insert({Term::blank("d"), first, ex("x")});
    CHECK_FALSE(listToSequence(missing, Term::blank("d")).ok);
  }

  SUBCASE("termination on every finite graph") {
    // Worst case: visited-set bound equals node count.
    Graph chain;
    Term prev = Term::blank("n0");
    for (int i = 1; i < 50; ++i) {
      Term cur = Term::blank("n" + std::to_string(i));
      chain.insert({prev, first, ex("v")});
      chain.insert({prev, rest, cur});
      prev = cur;
    }
    chain.insert({prev, first, ex("v")});
    chain.insert({prev, rest, Term::blank("n0")});  // close the loop
    CHECK_FALSE(listToSequence(chain, Term::blank("n0")).ok);
  }
}

TEST_CASE("typesOf closes over rdfs:subClassOf across data and ontology") {
  const Term a = Term::iri(vocab::kRdfType);
  const Term sub = Term::iri(vocab::kRdfsSubClassOf);

  Graph ontology;
  ontology.insert({ex("PropertyExpectation"), sub, ex("Expectation")});
  ontology.insert({ex("Expectation"), sub, ex("IntentOperand")});

  Graph data;
  data.insert({ex("ThroughputExp"), a, ex("PropertyExpectation")});

  auto types = typesOf(data, ex("ThroughputExp"), ontology);
  CHECK(types.count(ex("PropertyExpectation")));
  CHECK(types.count(ex("Expectation")));
  CHECK(types.count(ex("IntentOperand")));
  CHECK(types.size() == 3);

  SUBCASE("untyped node has no types") {
    CHECK(typesOf(data, ex("nobody"), ontology).empty());
  }

  SUBCASE("closure equals repeated one-step expansion to fixpoint") {
    Graph chainOnt;
    for (int i = 0; i < 5; ++i)
      chainOnt.insert({ex("C" + std::to_string(i)), sub, ex("C" + std::to_string(i + 1))});
    Graph d;
    d.insert({ex("x"), a, ex("C0")});

    // Independent fixpoint oracle: one-step expansion until stable.
    std::set<Term> expected{ex("C0")};
    bool changed = true;
    while (changed) {
      changed = false;
      std::set<Term> next = expected;
      for (const Term& c : expected) {
        for (const Term& super : chainOnt.objects(c, sub)) {
          if (next.insert(super).second) changed = true;
        }
      }
      expected = next;
    }
    CHECK(typesOf(d, ex("x"), chainOnt) == expected);
    CHECK(expected.size() == 6);
  }

  SUBCASE("data-graph subclass axioms participate in the closure") {
    Graph d2;
    d2.insert({ex("y"), a, ex("LocalClass")});
    d2.insert({ex("LocalClass"), sub, ex("Expectation")});
    auto t = typesOf(d2, ex("y"), ontology);
    CHECK(t.count(ex("IntentOperand")));
  }
}
