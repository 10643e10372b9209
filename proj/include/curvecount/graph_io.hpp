#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "curvecount/graph.hpp"

namespace curvecount {

/// Malformed graph JSON. Syntax errors carry a 1-based line and column;
/// schema errors carry the JSON pointer of the offending value.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  explicit ParseError(const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

/// Format: {"vertices":[{"id":"v1","genus":0},...],"edges":[{"id":"e1","ends":["v1","v2"]},...]}
/// Unknown keys are rejected. "genus" is optional on input and defaults to 0.
Multigraph parse_graph_json(std::string_view text);

/// Compact canonical rendering in the format above; re-parses to an equal graph.
std::string to_graph_json(const Multigraph& g);

}  // namespace curvecount
