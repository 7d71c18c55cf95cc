#pragma once

#include <string>

#include "intentcheck/graph.hpp"
#include "intentcheck/shacl/model.hpp"

namespace intentcheck::shacl {

enum class ReportFormat { Turtle, Json };

/// Turtle report: one sh:ValidationReport node with sh:conforms and nested
/// sh:result blocks (focusNode / resultPath / value / resultSeverity /
/// sourceShape / sourceConstraint / resultMessage). Only prefixes actually
/// used by report terms are emitted. Byte-deterministic for a given report.
std::string serializeReportTurtle(const ValidationReport& report, const rdf::PrefixMap& prefixes);

/// Stable JSON: {"conforms": bool, "results": [...]}, with terms encoded as
/// tagged objects so the result list round-trips exactly.
std::string serializeReportJson(const ValidationReport& report);

ValidationReport reportFromJson(const std::string& json);

std::string serializeReport(const ValidationReport& report, ReportFormat format,
                            const rdf::PrefixMap& prefixes);

}  // namespace intentcheck::shacl
