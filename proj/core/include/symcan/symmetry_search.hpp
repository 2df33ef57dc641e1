#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symcan/big_uint.hpp"
#include "symcan/graph.hpp"
#include "symcan/orbit_partition.hpp"
#include "symcan/search_limits.hpp"

namespace symcan {

struct SymmetrySearchOptions {
  // Individualization sequence to force onto the left-most path (the
  // stabilizer decomposition). Vertices that are already singletons after
  // refinement at their level are skipped.
  std::optional<std::vector<int>> forced_sequence;
  SearchLimits limits;
};

struct SymmetryReport {
  std::vector<Permutation> generators;
  BigUint group_order;
  // Vertices fixed along the left-most path, in order.
  std::vector<int> stabilizer_sequence;
  // level_orbits[l] = orbits of the subgroup stabilizing the first l targets.
  std::vector<OrbitPartition> level_orbits;
  std::uint64_t nodes_explored = 0;
  std::uint64_t bad_nodes = 0;  // lockstep-refinement conflicts

  const OrbitPartition& orbits() const { return level_orbits.front(); }
};

// Depth-first OPP search for a generating set of Aut(g): subgroup
// decomposition down the left-most path, vertex-swap branching elsewhere,
// matching/non-isomorphic pair handling, and coset plus orbit pruning. The
// group order is the product of target orbit sizes along the stabilizer
// chain, never an enumeration.
SymmetryReport search_automorphisms(const Graph& g, const SymmetrySearchOptions& options = {});

}  // namespace symcan
