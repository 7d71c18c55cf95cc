#include "intentcheck/harness/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "intentcheck/shacl/loader.hpp"
#include "intentcheck/turtle.hpp"

namespace intentcheck::harness {

namespace fs = std::filesystem;

std::string tierName(Tier tier) { return tier == Tier::Af ? "af" : "sparql"; }

std::string readTextFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw WorkspaceError("cannot read file: " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void loadTurtleFile(const fs::path& path, rdf::Graph& graph, rdf::PrefixMap& prefixes) {
  std::string text = readTextFile(path);
  try {
    rdf::ParsedTurtle parsed = rdf::parseTurtle(text);
    // Blank node labels are file-scoped in Turtle; qualify them with the
    // file stem so merged files cannot collide.
    const std::string scope = path.stem().string() + ".";
    auto scoped = [&](const rdf::Term& t) {
      return t.isBlank() ? rdf::Term::blank(scope + t.value()) : t;
    };
    for (const rdf::Triple& t : parsed.graph.triples())
      graph.insert({scoped(t.subject), t.predicate, scoped(t.object)});
    prefixes.merge(parsed.prefixes);
  } catch (const rdf::TurtleError& e) {
    throw WorkspaceError(path.string() + ": " + e.what());
  }
}

std::vector<fs::path> listTurtleFiles(const fs::path& dir) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) return files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".ttl")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

Workspace loadWorkspace(const fs::path& root, Tier tier) {
  if (!fs::is_directory(root)) throw WorkspaceError("no such corpus root: " + root.string());

  Workspace ws;
  ws.root = root;
  ws.tier = tier;

  rdf::PrefixMap ontologyPrefixes;
  for (const fs::path& file : listTurtleFiles(root / "ontology"))
    loadTurtleFile(file, ws.baselineOntology, ontologyPrefixes);
  ws.ontology.insertAll(ws.baselineOntology);
  for (const fs::path& file : listTurtleFiles(root / "extensions"))
    loadTurtleFile(file, ws.ontology, ontologyPrefixes);
  ws.baselineOntology.freeze();
  ws.ontology.freeze();

  rdf::Graph shapesData;
  rdf::PrefixMap shapesPrefixes;
  for (const fs::path& file : listTurtleFiles(root / "shapes")) {
    const std::string name = file.filename().string();
    if (tier == Tier::Af && name == "tier-sparql.ttl") continue;
    if (tier == Tier::Sparql && (name == "tier-af.ttl" || name == "constraint-library.ttl"))
      continue;
    loadTurtleFile(file, shapesData, shapesPrefixes);
  }
  shapesData.freeze();

  try {
    ws.shapes = shacl::loadShapes(shapesData, shapesPrefixes);
  } catch (const shacl::ShapesError& e) {
    throw WorkspaceError("shapes: " + std::string(e.what()));
  }

  try {
    ws.catalog = tio::loadCatalog(ws.ontology);
  } catch (const tio::CatalogError& e) {
    throw WorkspaceError("ontology catalog: " + std::string(e.what()));
  }

  ws.prefixes = ontologyPrefixes;
  ws.prefixes.merge(shapesPrefixes);
  return ws;
}

}  // namespace intentcheck::harness
