#include "symcan/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "symcan/sha256.hpp"

namespace symcan {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
  try {
    std::size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("malformed ") + what + " '" + tok + "'");
  }
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
  int n = -1, m = -1;
  int line_no = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> colors;
  std::set<std::pair<int, int>> seen;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (n >= 0) throw ParseError(line_no, "duplicate problem header");
      if (tokens.size() != 4 || tokens[1] != "edge")
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      n = parse_int(tokens[2], line_no, "vertex count");
      m = parse_int(tokens[3], line_no, "edge count");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative counts in header");
      colors.assign(n, 0);
    } else if (tokens[0] == "e") {
      if (n < 0) throw ParseError(line_no, "edge before problem header");
      if (tokens.size() != 3) throw ParseError(line_no, "malformed edge line");
      int u = parse_int(tokens[1], line_no, "vertex");
      int v = parse_int(tokens[2], line_no, "vertex");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "vertex index out of range [1, " + std::to_string(n) + "]");
      if (u == v) throw ParseError(line_no, "self-loop");
      int lo = std::min(u, v) - 1, hi = std::max(u, v) - 1;
      if (!seen.insert({lo, hi}).second) throw ParseError(line_no, "duplicate edge");
      edges.emplace_back(u - 1, v - 1);
    } else if (tokens[0] == "n") {
      if (n < 0) throw ParseError(line_no, "color line before problem header");
      if (tokens.size() != 3) throw ParseError(line_no, "malformed color line");
      int v = parse_int(tokens[1], line_no, "vertex");
      int c = parse_int(tokens[2], line_no, "color");
      if (v < 1 || v > n) throw ParseError(line_no, "vertex index out of range");
      if (c < 0) throw ParseError(line_no, "negative color");
      colors[v - 1] = c;
    } else {
      throw ParseError(line_no, "unrecognized line type '" + tokens[0] + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing problem header");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  return Graph(n, edges, std::move(colors));
}

Graph parse_dimacs(const std::string& text) {
  std::istringstream ss(text);
  return parse_dimacs(ss);
}

Graph parse_cnf(std::istream& in) {
  int vars = -1, clause_count = -1;
  int line_no = 0;
  std::string line;
  std::vector<std::vector<int>> clauses;
  std::vector<int> current;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (vars >= 0) throw ParseError(line_no, "duplicate problem header");
      if (tokens.size() != 4 || tokens[1] != "cnf")
        throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      vars = parse_int(tokens[2], line_no, "variable count");
      clause_count = parse_int(tokens[3], line_no, "clause count");
      if (vars < 0 || clause_count < 0) throw ParseError(line_no, "negative counts in header");
      continue;
    }
    if (vars < 0) throw ParseError(line_no, "clause before problem header");
    for (const auto& tok : tokens) {
      int lit = parse_int(tok, line_no, "literal");
      if (lit == 0) {
        clauses.push_back(current);
        current.clear();
      } else {
        if (std::abs(lit) > vars)
          throw ParseError(line_no, "variable index out of range [1, " + std::to_string(vars) + "]");
        current.push_back(lit);
      }
    }
  }
  if (vars < 0) throw ParseError(line_no, "missing problem header");
  if (!current.empty()) throw ParseError(line_no, "unterminated clause");
  if (static_cast<int>(clauses.size()) != clause_count)
    throw ParseError(line_no, "declared " + std::to_string(clause_count) + " clauses, found " +
                                  std::to_string(clauses.size()));

  auto lit_vertex = [](int lit) {
    return lit > 0 ? 2 * (lit - 1) : 2 * (-lit - 1) + 1;
  };

  // Repeated clauses or tautologies may reproduce an existing edge; the
  // encoding merges them.
  std::set<std::pair<int, int>> edge_set;
  auto add_edge = [&edge_set](int u, int v) {
    if (u > v) std::swap(u, v);
    if (u != v) edge_set.insert({u, v});
  };

  for (int i = 0; i < vars; ++i) add_edge(2 * i, 2 * i + 1);

  int next_clause_vertex = 2 * vars;
  std::vector<std::pair<int, int>> clause_edges;
  for (const auto& raw : clauses) {
    std::vector<int> lits = raw;
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    if (lits.size() == 2) {
      add_edge(lit_vertex(lits[0]), lit_vertex(lits[1]));
    } else {
      int cv = next_clause_vertex++;
      for (int lit : lits) clause_edges.emplace_back(cv, lit_vertex(lit));
    }
  }

  std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
  edges.insert(edges.end(), clause_edges.begin(), clause_edges.end());
  std::vector<int> vertex_colors(next_clause_vertex, 0);
  for (int v = 2 * vars; v < next_clause_vertex; ++v) vertex_colors[v] = 1;
  return Graph(next_clause_vertex, edges, std::move(vertex_colors));
}

Graph parse_cnf(const std::string& text) {
  std::istringstream ss(text);
  return parse_cnf(ss);
}

std::string to_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.color(v) != 0)
      out += "n " + std::to_string(v + 1) + " " + std::to_string(g.color(v)) + "\n";
  }
  for (auto [u, v] : g.edges())
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

std::string graph_digest(const Graph& g) { return sha256_hex(to_dimacs(g)); }

}  // namespace symcan
