#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "symcan/big_uint.hpp"
#include "symcan/graph.hpp"
#include "symcan/orbit_partition.hpp"
#include "symcan/partition.hpp"
#include "symcan/search_limits.hpp"

namespace symcan {

enum class CellSelector { FirstNonSingleton, MaxNonUniformlyJoined };

// One level's certificate contribution: edges touching singleton cells,
// renamed to partition positions, normalized (min, max) and sorted.
using CertFragment = std::vector<std::pair<int, int>>;

// Fragment for a refined partition: every edge with at least one endpoint in
// a singleton cell, minus edges whose endpoints were both singletons already
// in the parent (their renamed pair is pinned and was emitted before).
CertFragment node_certificate_fragment(const Graph& g, const OrderedPartition& pi,
                                       const OrderedPartition* parent = nullptr);

// Index of the first non-singleton cell.
int cell_selector_first(const OrderedPartition& pi);

// First non-singleton cell nonuniformly joined to the most other cells (the
// vertices of one cell have both neighbors and non-neighbors in the other);
// ties break to the first position. pi must be equitable.
int cell_selector_max_nonuniform(const Graph& g, const OrderedPartition& pi);

struct CanonicalOptions {
  CellSelector selector = CellSelector::FirstNonSingleton;
  bool early_symmetry = true;
  SearchLimits limits;
};

struct CanonicalResult {
  Permutation canonical_labeling;  // vertex -> canonical position
  Graph canonical_form;            // apply_permutation(g, canonical_labeling)
  std::vector<Permutation> generators;
  BigUint group_order;
  std::uint64_t nodes_explored = 0;
  std::uint64_t leaves_visited = 0;
};

// Depth-first individualization-refinement canonical labeling: the first
// leaf is the reference for symmetry discovery, the lexicographically
// smallest certificate wins, subtrees are pruned when their certificate
// prefix leaves the left path and cannot beat the best, and coset/orbit
// pruning mirror the symmetry search.
CanonicalResult search_canonical(const Graph& g, const CanonicalOptions& options = {});

// Left-path comparison at equal depth: if the cell structures agree and all
// non-singleton cells are element-identical, propose the permutation mapping
// each singleton of `current` to the same-position singleton of `leftmost`.
// Absent on mismatch, identity, or failed verification.
std::optional<Permutation> left_path_early_symmetry(const Graph& g,
                                                    const OrderedPartition& current,
                                                    const OrderedPartition& leftmost);

// Vertices individualized along the left-most path (first element of the
// selected cell at each level).
std::vector<int> decomposition_sequence(const Graph& g,
                                        CellSelector selector = CellSelector::FirstNonSingleton);

}  // namespace symcan
