#pragma once

#include <vector>

#include "symcan/big_uint.hpp"
#include "symcan/graph.hpp"
#include "symcan/orbit_partition.hpp"

namespace symcan {

// Fully enumerated automorphism group of a small graph.
struct OracleGroup {
  std::vector<Permutation> elements;  // lexicographic image order; contains the identity
  OrbitPartition orbit_partition;

  BigUint order() const { return BigUint(elements.size()); }
};

// Enumerate all n! permutations and keep the automorphisms. Hard-limited to
// n <= 8 so a stray call can never dominate a test run.
OracleGroup brute_force_automorphisms(const Graph& g);

// Minimum over all n! labelings of the (colors, sorted edge list) encoding.
// A true canonical form; n <= 8.
Graph brute_force_canonical(const Graph& g);

// Level l = orbit partition of the subgroup fixing the first l vertices of
// the sequence pointwise. sequence.size() + 1 levels.
std::vector<OrbitPartition> stabilizer_chain_orbits(const OracleGroup& group,
                                                    const std::vector<int>& sequence);

}  // namespace symcan
