#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "intentcheck/graph.hpp"

namespace intentcheck::rdf {

/// Structural hash per blank node label, computed by three rounds of
/// iterative neighbourhood hashing over (direction, predicate, neighbour)
/// multisets. Equal hashes for structurally distinct nodes are possible in
/// principle; at corpus scale this is a documented heuristic, not a
/// complete graph-canonicalization.
std::map<std::string, std::uint64_t> canonicalBlankNodeHashes(const Graph& graph);

/// Deterministic relabeling of blank nodes ("c0", "c1", ...) ordered by
/// canonical hash, ties broken by the original label.
Graph canonicalizeBlankNodes(const Graph& graph);

/// Isomorphism up to blank-node renaming, decided by comparing the
/// canonicalized triple sets.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace intentcheck::rdf
