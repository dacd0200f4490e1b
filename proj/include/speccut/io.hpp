#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "speccut/graph.hpp"

namespace speccut {

/// Malformed edge-list input. line() is 1-based; 0 means the defect is not
/// tied to a single line (missing header, truncated file).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// Reads the edge-list format: optional '#' comment lines, a header
/// "p <n> <m>", then m lines "<u> <v> [<w>]" with 0-based indices and a
/// default weight of 1.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Deterministic writer: header then edges sorted lexicographically; the
/// weight column is omitted when it is exactly 1.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace speccut
