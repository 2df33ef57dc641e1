#include "symcan/symmetry_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "refine_engine.hpp"
#include "symcan/partition.hpp"

namespace symcan {
namespace {

using detail::PartitionEngine;

class SymmetrySearcher {
 public:
  SymmetrySearcher(const Graph& g, const SymmetrySearchOptions& options)
      : g_(g), options_(options), engine_(g, initial_partition(g), initial_partition(g)) {}

  SymmetryReport run() {
    build_left_path();
    int depth = static_cast<int>(levels_.size());
    report_.level_orbits.assign(depth + 1, OrbitPartition(g_.vertex_count()));

    // Deepest levels first: their generators pre-merge the orbit partitions
    // consulted by the shallower levels.
    for (int l = depth - 1; l >= 0; --l) {
      engine_.rewind(levels_[l].mark);
      explore_level(l);
    }

    report_.group_order = BigUint(1);
    for (int l = 0; l < depth; ++l)
      report_.group_order *= report_.level_orbits[l].orbit_size(levels_[l].target);
    return std::move(report_);
  }

 private:
  struct Level {
    PartitionEngine::Mark mark;  // state at this decomposition node
    int target = -1;
    int cell_begin = -1;
  };

  enum class Outcome { NotFound, Found };

  void build_left_path() {
    engine_.refine_from_all_cells();  // identical rows cannot conflict
    ++report_.nodes_explored;

    const std::vector<int>* forced =
        options_.forced_sequence ? &*options_.forced_sequence : nullptr;
    std::size_t forced_pos = 0;

    while (!engine_.is_discrete()) {
      int target = -1, begin = -1;
      if (forced) {
        while (forced_pos < forced->size()) {
          int v = (*forced)[forced_pos];
          if (v < 0 || v >= g_.vertex_count())
            throw std::invalid_argument("forced_sequence: vertex out of range at level " +
                                        std::to_string(forced_pos));
          int b = engine_.cell_begin_of(0, v);
          ++forced_pos;
          if (engine_.cell_size_at(b) > 1) {
            target = v;
            begin = b;
            break;
          }
          // already a singleton after refinement: skip
        }
        if (target < 0)
          throw std::invalid_argument(
              "forced_sequence: exhausted before the pair became discrete at level " +
              std::to_string(levels_.size()));
      } else {
        begin = first_nonsingleton_begin();
        target = engine_.elem(0, begin);
      }

      levels_.push_back({engine_.mark(), target, begin});
      report_.stabilizer_sequence.push_back(target);

      engine_.individualize_at(begin, target, target);
      engine_.refine_from(begin, begin + 1);
      ++report_.nodes_explored;
      options_.limits.check(report_.nodes_explored);
    }
  }

  int first_nonsingleton_begin() const {
    for (int b = 0; b < engine_.size(); b = engine_.next_begin(b))
      if (engine_.cell_size_at(b) > 1) return b;
    return -1;
  }

  void explore_level(int l) {
    Level& level = levels_[l];
    OrbitPartition& orbits = report_.level_orbits[l];
    std::vector<int> explored = {level.target};

    // the rewind restored the node exactly, so the bottom cell is as it was
    std::vector<int> candidates;
    collect_bottom_ascending(level.cell_begin, -1, candidates);

    for (int b : candidates) {
      if (b == level.target) continue;
      bool pruned = false;
      for (int c : explored) {
        if (orbits.same_orbit(b, c)) {
          pruned = true;
          break;
        }
      }
      if (pruned) continue;

      auto mark = engine_.mark();
      Outcome outcome = explore_mapping(level.cell_begin, level.target, b);
      engine_.rewind(mark);
      explored.push_back(b);
      if (outcome == Outcome::Found) {
        // generators are sparse; merge only their support into each level
        const Permutation& gamma = report_.generators.back();
        std::vector<int> moved;
        for (int v = 0; v < gamma.size(); ++v)
          if (gamma(v) != v) moved.push_back(v);
        for (int j = 0; j <= l; ++j) {
          for (int v : moved) report_.level_orbits[j].unite(v, gamma(v));
        }
      }
    }
  }

  // Individualize (top_v -> bottom_v) in the cell at `begin`, refine in
  // lockstep, and continue depth-first. A found symmetry unwinds the whole
  // subtree (one coset representative is enough).
  Outcome explore_mapping(int begin, int top_v, int bottom_v) {
    engine_.individualize_at(begin, top_v, bottom_v);
    bool ok = engine_.refine_from(begin, begin + 1);
    ++report_.nodes_explored;
    options_.limits.check(report_.nodes_explored);
    if (!ok) {
      ++report_.bad_nodes;
      return Outcome::NotFound;
    }

    if (engine_.is_discrete() || is_matching()) {
      Permutation gamma = extract();
      if (!is_automorphism(g_, gamma))
        throw std::logic_error("symmetry search: extracted permutation failed verification");
      report_.generators.push_back(std::move(gamma));
      return Outcome::Found;
    }

    // Active pair: vertex-swap heuristic first, then the remaining
    // bottom-cell vertices in ascending order.
    int next_target = -1, next_begin = -1;
    std::vector<int> candidates;
    int swap_begin = engine_.cell_begin_of(0, bottom_v);
    if (engine_.cell_size_at(swap_begin) > 1 && bottom_cell_contains(swap_begin, top_v)) {
      next_target = bottom_v;
      next_begin = swap_begin;
      candidates.push_back(top_v);
      collect_bottom_ascending(swap_begin, top_v, candidates);
    } else {
      next_begin = first_unmatched_begin();
      next_target = engine_.elem(0, next_begin);
      collect_bottom_ascending(next_begin, -1, candidates);
    }

    for (int b : candidates) {
      auto mark = engine_.mark();
      Outcome outcome = explore_mapping(next_begin, next_target, b);
      engine_.rewind(mark);
      if (outcome == Outcome::Found) return outcome;
    }
    return Outcome::NotFound;
  }

  bool bottom_cell_contains(int begin, int v) const {
    int p = engine_.pos(1, v);
    return p >= begin && p < begin + engine_.cell_size_at(begin);
  }

  void collect_bottom_ascending(int begin, int skip, std::vector<int>& out) const {
    std::size_t start = out.size();
    int end = begin + engine_.cell_size_at(begin);
    for (int i = begin; i < end; ++i) {
      int v = engine_.elem(1, i);
      if (v != skip) out.push_back(v);
    }
    std::sort(out.begin() + start, out.end());
  }

  // First non-singleton top cell that is not element-identical to its bottom
  // counterpart. Exists at every active node.
  int first_unmatched_begin() const {
    for (int b = 0; b < engine_.size(); b = engine_.next_begin(b)) {
      int size = engine_.cell_size_at(b);
      if (size == 1) continue;
      if (!cells_identical(b, size)) return b;
    }
    throw std::logic_error("symmetry search: active pair without an unmatched cell");
  }

  bool cells_identical(int begin, int size) const {
    for (int i = begin; i < begin + size; ++i) scratch_[engine_.elem(0, i)] = 1;
    bool same = true;
    for (int i = begin; i < begin + size; ++i) {
      if (!scratch_[engine_.elem(1, i)]) {
        same = false;
        break;
      }
    }
    for (int i = begin; i < begin + size; ++i) scratch_[engine_.elem(0, i)] = 0;
    return same;
  }

  bool is_matching() const {
    for (int b = 0; b < engine_.size(); b = engine_.next_begin(b)) {
      int size = engine_.cell_size_at(b);
      if (size > 1 && !cells_identical(b, size)) return false;
    }
    return true;
  }

  // Discrete: positionwise map. Matching: singletons positionwise, vertices
  // of non-singleton cells fixed.
  Permutation extract() const {
    std::vector<int> image(g_.vertex_count());
    for (int v = 0; v < g_.vertex_count(); ++v) image[v] = v;
    for (int b = 0; b < engine_.size(); b = engine_.next_begin(b)) {
      if (engine_.cell_size_at(b) == 1) image[engine_.elem(0, b)] = engine_.elem(1, b);
    }
    return Permutation(std::move(image));
  }

  const Graph& g_;
  SymmetrySearchOptions options_;
  PartitionEngine engine_;
  std::vector<Level> levels_;
  SymmetryReport report_;
  mutable std::vector<char> scratch_ = std::vector<char>(g_.vertex_count(), 0);
};

}  // namespace

SymmetryReport search_automorphisms(const Graph& g, const SymmetrySearchOptions& options) {
  if (g.vertex_count() == 0) {
    SymmetryReport report;
    report.group_order = BigUint(1);
    report.level_orbits.assign(1, OrbitPartition(0));
    return report;
  }
  SymmetrySearcher searcher(g, options);
  return searcher.run();
}

}  // namespace symcan
