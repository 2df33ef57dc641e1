#include <doctest.h>

#include <stdexcept>

#include "symcan/io.hpp"
#include "symcan/oracle.hpp"
#include "test_util.hpp"

using namespace symcan;

TEST_SUITE("oracle") {

TEST_CASE("group orders of the fixtures") {
  CHECK(brute_force_automorphisms(square_triangle_graph()).elements.size() == 48);
  Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(brute_force_automorphisms(k3).elements.size() == 6);  // S3
  CHECK(brute_force_automorphisms(matching_graph(3)).elements.size() == 48);  // 2^3 * 3!
}

TEST_CASE("group contains the identity and is verified") {
  auto group = brute_force_automorphisms(matching_graph(2));
  CHECK(group.elements.front().is_identity());  // lexicographic enumeration
  for (const auto& gamma : group.elements) CHECK(is_automorphism(matching_graph(2), gamma));
}

TEST_CASE("size guard") {
  Graph big(9, {});
  CHECK_THROWS_AS(brute_force_automorphisms(big), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_canonical(big), std::invalid_argument);
}

TEST_CASE("canonical form is relabeling-invariant") {
  Graph g = test::random_graph(7, 0.4, 11);
  Graph canon = brute_force_canonical(g);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto [relabeled, gamma] = random_relabel(g, seed);
    CHECK(brute_force_canonical(relabeled) == canon);
  }
}

TEST_CASE("canonical form of K3 is K3") {
  Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(brute_force_canonical(k3) == k3);
}

TEST_CASE("path and star have different canonical forms") {
  Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(brute_force_canonical(path) == brute_force_canonical(star));
}

TEST_CASE("colored graphs canonicalize by color too") {
  Graph a(2, {{0, 1}}, {0, 1});
  Graph b(2, {{0, 1}}, {1, 0});
  Graph c(2, {{0, 1}}, {0, 0});
  CHECK(brute_force_canonical(a) == brute_force_canonical(b));
  CHECK_FALSE(brute_force_canonical(a) == brute_force_canonical(c));
}

TEST_CASE("stabilizer chain on the fixture") {
  auto group = brute_force_automorphisms(square_triangle_graph());
  auto levels = stabilizer_chain_orbits(group, {3, 5, 6, 2});
  REQUIRE(levels.size() == 5);
  CHECK(levels[0].orbit_size(3) == 4);
  CHECK(levels[1].orbit_size(5) == 3);
  CHECK(levels[2].orbit_size(6) == 2);
  CHECK(levels[3].orbit_size(2) == 2);
  // orbit-stabilizer accounting recovers the group order
  CHECK(4 * 3 * 2 * 2 == 48);
  // after fixing 3,5,6,2 only the identity remains
  for (int v = 0; v < 7; ++v) CHECK(levels[4].orbit_size(v) == 1);
}

TEST_CASE("empty sequence gives the full orbit partition") {
  auto group = brute_force_automorphisms(square_triangle_graph());
  auto levels = stabilizer_chain_orbits(group, {});
  REQUIRE(levels.size() == 1);
  CHECK(levels[0] == group.orbit_partition);
  CHECK(levels[0].to_string() == "[0,1,2,3|4,5,6]");
}

TEST_CASE("full sequence pins everything") {
  auto group = brute_force_automorphisms(matching_graph(2));
  auto levels = stabilizer_chain_orbits(group, {0, 1, 2, 3});
  CHECK(levels.back().orbit_count() == 4);
}

}  // TEST_SUITE
