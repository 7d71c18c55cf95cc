#include "intentcheck/shacl/report.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "intentcheck/shacl/vocab.hpp"
#include "intentcheck/turtle.hpp"

namespace intentcheck::shacl {

using rdf::PrefixMap;
using rdf::Term;

namespace {

void noteUsedPrefix(const Term& t, const PrefixMap& prefixes, std::map<std::string, std::string>& used) {
  if (!t.isIri() && !t.isLiteral()) return;
  auto note = [&](const std::string& iri) {
    if (auto curie = prefixes.compact(iri)) {
      auto colon = curie->find(':');
      std::string label = curie->substr(0, colon);
      auto ns = prefixes.bindings().find(label);
      if (ns != prefixes.bindings().end()) used[label] = ns->second;
    }
  };
  if (t.isIri()) {
    note(t.value());
  } else if (t.datatype() != rdf::vocab::kXsdString && t.datatype() != rdf::vocab::kXsdInteger &&
             t.datatype() != rdf::vocab::kXsdDecimal && t.datatype() != rdf::vocab::kXsdBoolean &&
             t.lang().empty()) {
    note(t.datatype());
  }
}

nlohmann::json termToJson(const Term& t) {
  nlohmann::json j;
  switch (t.kind()) {
    case rdf::TermKind::Iri:
      j["kind"] = "iri";
      j["value"] = t.value();
      break;
    case rdf::TermKind::BlankNode:
      j["kind"] = "blank";
      j["value"] = t.value();
      break;
    case rdf::TermKind::Literal:
      j["kind"] = "literal";
      j["value"] = t.value();
      j["datatype"] = t.datatype();
      if (!t.lang().empty()) j["lang"] = t.lang();
      break;
  }
  return j;
}

Term termFromJson(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "iri") return Term::iri(j.at("value").get<std::string>());
  if (kind == "blank") return Term::blank(j.at("value").get<std::string>());
  if (j.contains("lang"))
    return Term::langLiteral(j.at("value").get<std::string>(), j.at("lang").get<std::string>());
  return Term::literal(j.at("value").get<std::string>(), j.at("datatype").get<std::string>());
}

std::string severityLabel(Severity s) {
  switch (s) {
    case Severity::Info: return "Info";
    case Severity::Warning: return "Warning";
    case Severity::Violation: return "Violation";
  }
  return "Violation";
}

Severity severityFromLabel(const std::string& label) {
  if (label == "Info") return Severity::Info;
  if (label == "Warning") return Severity::Warning;
  return Severity::Violation;
}

}  // namespace

std::string serializeReportTurtle(const ValidationReport& report, const PrefixMap& prefixes) {
  // Collect the prefixes the report actually uses; sh: is always present.
  std::map<std::string, std::string> used;
  used["sh"] = rdf::vocab::kShNs;
  PrefixMap shOnly;
  shOnly.bind("sh", rdf::vocab::kShNs);
  PrefixMap full = prefixes;
  full.bind("sh", rdf::vocab::kShNs);
  for (const ValidationResult& r : report.results) {
    noteUsedPrefix(r.focusNode, full, used);
    if (r.path) noteUsedPrefix(*r.path, full, used);
    if (r.value) noteUsedPrefix(*r.value, full, used);
    noteUsedPrefix(r.sourceShape, full, used);
    if (r.sourceConstraint) noteUsedPrefix(*r.sourceConstraint, full, used);
  }

  PrefixMap emit;
  for (const auto& [label, ns] : used) emit.bind(label, ns);

  std::ostringstream out;
  for (const auto& [label, ns] : emit.bindings())
    out << "@prefix " << label << ": <" << ns << "> .\n";
  out << "\n";
  out << "[] a sh:ValidationReport ;\n";
  out << "  sh:conforms " << (report.conforms ? "true" : "false");
  for (const ValidationResult& r : report.results) {
    out << " ;\n  sh:result [\n";
    out << "    sh:focusNode " << rdf::renderTerm(r.focusNode, emit) << " ;\n";
    if (r.path) out << "    sh:resultPath " << rdf::renderTerm(*r.path, emit) << " ;\n";
    if (r.value) out << "    sh:value " << rdf::renderTerm(*r.value, emit) << " ;\n";
    out << "    sh:resultSeverity sh:" << severityLabel(r.severity) << " ;\n";
    out << "    sh:sourceShape " << rdf::renderTerm(r.sourceShape, emit) << " ;\n";
    if (r.sourceConstraint)
      out << "    sh:sourceConstraint " << rdf::renderTerm(*r.sourceConstraint, emit) << " ;\n";
    out << "    sh:resultMessage " << Term::stringLiteral(r.message).toString() << " ]";
  }
  out << " .\n";
  return out.str();
}

std::string serializeReportJson(const ValidationReport& report) {
  nlohmann::json j;
  j["conforms"] = report.conforms;
  nlohmann::json results = nlohmann::json::array();
  for (const ValidationResult& r : report.results) {
    nlohmann::json jr;
    jr["focusNode"] = termToJson(r.focusNode);
    jr["path"] = r.path ? termToJson(*r.path) : nlohmann::json(nullptr);
    jr["value"] = r.value ? termToJson(*r.value) : nlohmann::json(nullptr);
    jr["severity"] = severityLabel(r.severity);
    jr["sourceShape"] = termToJson(r.sourceShape);
    jr["sourceConstraint"] =
        r.sourceConstraint ? termToJson(*r.sourceConstraint) : nlohmann::json(nullptr);
    jr["message"] = r.message;
    results.push_back(std::move(jr));
  }
  j["results"] = std::move(results);
  return j.dump(2) + "\n";
}

ValidationReport reportFromJson(const std::string& json) {
  nlohmann::json j = nlohmann::json::parse(json);
  ValidationReport report;
  report.conforms = j.at("conforms").get<bool>();
  for (const auto& jr : j.at("results")) {
    ValidationResult r;
    r.focusNode = termFromJson(jr.at("focusNode"));
    if (!jr.at("path").is_null()) r.path = termFromJson(jr.at("path"));
    if (!jr.at("value").is_null()) r.value = termFromJson(jr.at("value"));
    r.severity = severityFromLabel(jr.at("severity").get<std::string>());
    r.sourceShape = termFromJson(jr.at("sourceShape"));
    if (!jr.at("sourceConstraint").is_null())
      r.sourceConstraint = termFromJson(jr.at("sourceConstraint"));
    r.message = jr.at("message").get<std::string>();
    report.results.push_back(std::move(r));
  }
  return report;
}

std::string serializeReport(const ValidationReport& report, ReportFormat format,
                            const PrefixMap& prefixes) {
  return format == ReportFormat::Turtle ? serializeReportTurtle(report, prefixes)
                                        : serializeReportJson(report);
}

}  // namespace intentcheck::shacl
