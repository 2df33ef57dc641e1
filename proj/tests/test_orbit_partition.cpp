#include <doctest.h>

#include "symcan/orbit_partition.hpp"

using namespace symcan;

TEST_SUITE("orbits") {

TEST_CASE("starts discrete") {
  OrbitPartition orbits(4);
  CHECK(orbits.orbit_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(orbits.orbit_size(v) == 1);
}

TEST_CASE("merging a permutation closes the relation") {
  OrbitPartition orbits(6);
  orbits.merge_permutation(Permutation({1, 2, 0, 3, 4, 5}));  // (0 1 2)
  CHECK(orbits.same_orbit(0, 2));
  CHECK(orbits.orbit_size(1) == 3);
  CHECK_FALSE(orbits.same_orbit(0, 3));
  // adding gamma keeps orbit(v) == orbit(gamma(v)) for all v
  Permutation gamma({0, 1, 2, 4, 3, 5});  // (3 4)
  orbits.merge_permutation(gamma);
  for (int v = 0; v < 6; ++v) CHECK(orbits.same_orbit(v, gamma(v)));
}

TEST_CASE("transitive closure across generators") {
  OrbitPartition orbits(5);
  orbits.unite(0, 1);
  orbits.unite(1, 2);
  orbits.unite(3, 4);
  CHECK(orbits.same_orbit(0, 2));
  CHECK(orbits.orbit_count() == 2);
  CHECK(orbits.to_string() == "[0,1,2|3,4]");
}

TEST_CASE("normalized listing and equality") {
  OrbitPartition a(4), b(4);
  a.unite(3, 1);
  b.unite(1, 3);
  CHECK(a == b);
  CHECK(a.orbits() == std::vector<std::vector<int>>{{0}, {1, 3}, {2}});
}

}  // TEST_SUITE
