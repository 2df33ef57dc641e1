#include <doctest.h>

#include <fstream>
#include <sstream>

#include "symcan/io.hpp"
#include "symcan/oracle.hpp"
#include "symcan/sha256.hpp"

using namespace symcan;

namespace {
std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_SUITE("io") {

TEST_CASE("dimacs basic parse") {
  Graph g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("dimacs fixture file") {
  Graph g = parse_dimacs(read_file(std::string(SYMCAN_TEST_DATA_DIR) + "/square_triangle.col"));
  CHECK(g.vertex_count() == 7);
  CHECK(g.edge_count() == 7);
  CHECK(g == square_triangle_graph());
}

TEST_CASE("dimacs errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_dimacs("p edge 2 1\ne 1 1\n"), "line 2: self-loop", ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n"), ParseError);     // duplicate
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), ParseError);            // out of range
  CHECK_THROWS_AS(parse_dimacs("p graph 2 1\ne 1 2\n"), ParseError);           // bad header
  CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);                        // no header
  CHECK_THROWS_AS(parse_dimacs("p edge 2 2\ne 1 2\n"), ParseError);            // count mismatch
  try {
    parse_dimacs("p edge 3 1\nc fine\ne 1 4\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("dimacs colors") {
  Graph g = parse_dimacs("p edge 2 1\nn 1 4\ne 1 2\n");
  CHECK(g.color(0) == 4);
  CHECK(g.color(1) == 0);
}

TEST_CASE("cnf unary clause gets a clause vertex") {
  Graph g = parse_cnf("p cnf 1 1\n1 0\n");
  CHECK(g.vertex_count() == 3);  // x, !x, clause
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  CHECK(g.color(2) == 1);
}

TEST_CASE("cnf binary clause becomes a direct edge") {
  Graph g = parse_cnf("p cnf 2 1\n1 2 0\n");
  CHECK(g.vertex_count() == 4);  // no clause vertex
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {2, 3}});
}

TEST_CASE("cnf ternary clause keeps the clause vertex") {
  Graph g = parse_cnf("p cnf 3 1\n1 2 3 0\n");
  CHECK(g.vertex_count() == 7);
  CHECK(g.color(6) == 1);
  CHECK(g.degree(6) == 3);
}

TEST_CASE("cnf symmetric pair clause has the literal swap symmetry") {
  Graph g = parse_cnf("p cnf 2 1\n1 2 0\n");
  auto group = brute_force_automorphisms(g);
  CHECK(group.elements.size() == 2);
  // x1 <-> x2 together with !x1 <-> !x2
  CHECK(group.elements[1] == Permutation({2, 3, 0, 1}));
}

TEST_CASE("cnf errors") {
  CHECK_THROWS_AS(parse_cnf("p cnf 1 1\n2 0\n"), ParseError);   // var out of range
  CHECK_THROWS_AS(parse_cnf("p cn 1 1\n1 0\n"), ParseError);    // malformed header
  CHECK_THROWS_AS(parse_cnf("p cnf 1 2\n1 0\n"), ParseError);   // clause count mismatch
  CHECK_THROWS_AS(parse_cnf("p cnf 1 1\n1\n"), ParseError);     // unterminated clause
}

TEST_CASE("cnf repeated binary clause does not duplicate the edge") {
  Graph g = parse_cnf("p cnf 2 2\n1 2 0\n1 2 0\n");
  CHECK(g.edge_count() == 3);
}

TEST_CASE("dimacs round trip") {
  Graph g = parse_dimacs("p edge 4 3\nn 2 7\ne 1 2\ne 3 4\ne 1 3\n");
  Graph back = parse_dimacs(to_dimacs(g));
  CHECK(back == g);
}

TEST_CASE("sha256 known vectors") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("graph digest is the digest of the serialization") {
  Graph g = square_triangle_graph();
  CHECK(graph_digest(g) == sha256_hex(to_dimacs(g)));
}

}  // TEST_SUITE
