#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "intentcheck/graph.hpp"
#include "intentcheck/shacl/model.hpp"
#include "intentcheck/tio/catalog.hpp"

namespace intentcheck::harness {

/// Two semantically equivalent shape encodings: inline SPARQL targets and
/// constraints, or parameterized components and target types.
enum class Tier { Sparql, Af };

std::string tierName(Tier tier);

class WorkspaceError : public std::runtime_error {
 public:
  explicit WorkspaceError(const std::string& message) : std::runtime_error(message) {}
};

/// A loaded fixture root: ontology/ (baseline modules), extensions/
/// (additive mixins), shapes/ (core shape files plus per-tier files),
/// tests/<Module>/{good,bad}/.
struct Workspace {
  std::filesystem::path root;
  Tier tier = Tier::Af;
  rdf::Graph ontology;          // baseline + extensions
  rdf::Graph baselineOntology;  // without extension files
  shacl::ShapesGraph shapes;
  tio::VocabularyCatalog catalog;
  rdf::PrefixMap prefixes;  // display prefixes: ontology + shapes + defaults
};

/// Tier file selection within shapes/: constraint-library.ttl and
/// tier-af.ttl load only on the AF tier, tier-sparql.ttl only on the
/// SPARQL tier; every other shapes file is shared.
Workspace loadWorkspace(const std::filesystem::path& root, Tier tier);

std::string readTextFile(const std::filesystem::path& path);

/// Parses one Turtle file into an existing graph, merging prefixes.
/// Errors are rethrown with the file name prepended.
void loadTurtleFile(const std::filesystem::path& path, rdf::Graph& graph,
                    rdf::PrefixMap& prefixes);

/// Sorted .ttl files directly inside a directory; empty when missing.
std::vector<std::filesystem::path> listTurtleFiles(const std::filesystem::path& dir);

}  // namespace intentcheck::harness
