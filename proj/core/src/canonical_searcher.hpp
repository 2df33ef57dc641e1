#pragma once

#include <cstdint>
#include <vector>

#include "refine_engine.hpp"
#include "symcan/canonical_search.hpp"
#include "symcan/orbit_partition.hpp"

namespace symcan::detail {

// Individualization-refinement search driver. Runs either as the single-pass
// canonical search (symmetry detection on, orbit data discovered as it goes)
// or as the resumed third phase of the combined pipeline (symmetry detection
// off, orbit partitions supplied per decomposition level).
class CanonicalSearcher {
 public:
  struct Config {
    CellSelector selector = CellSelector::FirstNonSingleton;
    bool early_symmetry = true;
    bool symmetry_detection = true;
    SearchLimits limits;
  };

  CanonicalSearcher(const Graph& g, const Config& config);

  // Phase 1: left-most path down to the first leaf.
  void build_left_path();
  const std::vector<int>& targets() const { return targets_; }
  std::uint64_t nodes_explored() const { return nodes_; }
  std::uint64_t leaves_visited() const { return leaves_; }

  // Orbit partitions to prune with, one per decomposition level. Must cover
  // targets().size() + 1 levels. When unset, the searcher grows its own.
  void set_external_orbits(const std::vector<OrbitPartition>* orbits) {
    external_orbits_ = orbits;
  }

  // Remainder of the depth-first search, deepest decomposition level first.
  void explore();

  CanonicalResult result(const Graph& g) const;

 private:
  enum class Cmp { Equal, Better, Worse };
  enum class Outcome { NotFound, Found };

  struct LeftNode {
    PartitionEngine::Mark mark;  // state at this node
    CertFragment frag;
    int selected_begin = -1;
    int target = -1;
    // snapshots for the left-path comparison; filled only when early
    // symmetry detection can use them
    std::vector<int> begins;
    std::vector<int> elems;
    std::vector<std::vector<int>> sorted_cells;  // per cell, empty for singletons
  };

  int select_cell() const;
  int first_nonsingleton_begin() const;
  int max_nonuniform_begin() const;
  CertFragment compute_fragment(std::size_t pins_before) const;
  static int compare_fragments(const CertFragment& a, const CertFragment& b);
  LeftNode snapshot_node() const;
  void record_left_node();
  void update_best(int depth);
  Outcome explore_node(int begin, int v, int branch_level, int depth);
  Outcome try_early_symmetry(int depth);
  Permutation leaf_permutation() const;
  const OrbitPartition& orbits_at(int level) const;

  const Graph& g_;
  Config config_;
  PartitionEngine engine_;

  std::vector<LeftNode> left_;
  std::vector<int> targets_;
  int left_depth_ = 0;

  std::vector<int> first_flat_;
  std::vector<int> best_pos_;
  std::vector<CertFragment> best_frags_;
  int best_depth_ = 0;

  std::vector<CertFragment> path_frags_;
  std::vector<Cmp> path_cmp_;
  std::vector<char> path_left_eq_;

  std::vector<OrbitPartition> level_orbits_;
  const std::vector<OrbitPartition>* external_orbits_ = nullptr;
  std::vector<Permutation> generators_;
  Permutation found_gen_;

  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
};

}  // namespace symcan::detail
