#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "intentcheck/graph.hpp"
#include "intentcheck/sparql/ast.hpp"

namespace intentcheck::sparql {

class QueryError : public std::runtime_error {
 public:
  QueryError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses the restricted SELECT dialect. Prefixed names resolve against the
/// surrounding shapes file's prefix map. Constructs outside the dialect
/// (SERVICE, MINUS, ORDER BY, DISTINCT, ...) are rejected with an
/// unsupported-feature error, never silently ignored.
std::shared_ptr<const Query> parseQuery(const std::string& text, const rdf::PrefixMap& prefixes);

}  // namespace intentcheck::sparql
