#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "symcan/graph.hpp"

namespace symcan {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// DIMACS edge format: "c" comments, "p edge <n> <m>" header, "e <u> <v>"
// edges (1-indexed), optional "n <v> <color>" color lines. Duplicate edges
// and self-loops are rejected.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(const std::string& text);

// DIMACS CNF, encoded as a 2-colored graph: one vertex per literal (color 0),
// one vertex per clause of size != 2 (color 1), an edge between complementary
// literals, clause-to-literal edges, and a direct literal-literal edge for
// binary clauses.
Graph parse_cnf(std::istream& in);
Graph parse_cnf(const std::string& text);

// Deterministic DIMACS bytes: header, color lines for non-zero colors, then
// edges sorted ascending. Acts as the graph's signature.
std::string to_dimacs(const Graph& g);

// Hex SHA-256 of to_dimacs(g).
std::string graph_digest(const Graph& g);

}  // namespace symcan
