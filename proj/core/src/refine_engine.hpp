#pragma once

#include <array>
#include <cstddef>
#include <deque>
#include <utility>
#include <vector>

#include "symcan/graph.hpp"
#include "symcan/partition.hpp"

namespace symcan::detail {

// Mutable ordered-partition state shared by the refinement entry points and
// both searches. Holds one or two element rows over a common cell layout
// (begins and sizes always agree across rows), supports equitable refinement
// driven by a FIFO splitter work-list, individualization, and trail-based
// rewind to a previously taken mark.
//
// Cells are identified by the begin offset of their segment in the element
// array; splitting rewrites a segment in place, so other cells never move.
class PartitionEngine {
 public:
  struct Mark {
    std::size_t trail = 0;
    std::size_t pins = 0;
    int cells = 0;
  };

  PartitionEngine(const Graph& g, const OrderedPartition& row0);
  PartitionEngine(const Graph& g, const OrderedPartition& top, const OrderedPartition& bottom);

  int rows() const { return rows_; }
  int size() const { return n_; }
  int cell_count() const { return cells_; }
  bool is_discrete() const { return cells_ == n_; }

  int elem(int row, int p) const { return elems_[row][p]; }
  int pos(int row, int v) const { return pos_[row][v]; }
  int cell_begin_of(int row, int v) const { return cell_start_[pos_[row][v]]; }
  int cell_size_at(int begin) const { return cell_size_[begin]; }
  int next_begin(int begin) const { return begin + cell_size_[begin]; }

  Mark mark() const { return {trail_.size(), pinned_.size(), cells_}; }
  void rewind(const Mark& m);

  // Refine to the coarsest equitable partition(s); returns false if the two
  // rows' split patterns diverge (lockstep conflict). The conflicting state
  // is left as-is for the caller to rewind.
  bool refine_from_all_cells();
  bool refine_from(int begin_a, int begin_b);

  // Split the cell at `begin` into ({vertex_per_row}, remainder), singleton
  // first, remainder order preserved.
  void individualize_at(int begin, int top_vertex, int bottom_vertex = -1);

  OrderedPartition to_partition(int row) const;

  // After a lockstep conflict: the partition a row would have become had its
  // own (divergent) split of the conflicting cell been applied. Makes the
  // non-isomorphism visible in the exported pair.
  OrderedPartition to_partition_with_conflict(int row) const;
  bool has_conflict() const { return has_conflict_; }

  // Vertices (row 0) whose cells became singletons, in pin order.
  const std::vector<int>& pinned_stack() const { return pinned_; }
  int pin_index(int v) const { return pinned_at_[v]; }

  const Graph& graph() const { return *g_; }

 private:
  void init_layout(const OrderedPartition& p);
  void init_row(int row, const OrderedPartition& p);
  void pin(int v);
  bool process_queue();
  bool process_splitter(int begin);
  bool split_cell(int begin);

  const Graph* g_;
  int n_;
  int rows_;
  int cells_ = 0;
  std::array<std::vector<int>, 2> elems_;
  std::array<std::vector<int>, 2> pos_;
  std::vector<int> cell_start_;  // position -> begin of its cell
  std::vector<int> cell_size_;   // valid at begins

  std::vector<int> pinned_;
  std::vector<int> pinned_at_;

  struct SplitEvent {
    int begin;
    int end;
    std::array<std::vector<int>, 2> saved;
  };
  std::vector<SplitEvent> trail_;

  struct ConflictInfo {
    int begin = -1;
    int end = -1;
    std::array<std::vector<int>, 2> ordered;        // segment vertices in count order
    std::array<std::vector<int>, 2> fragment_sizes;
  };
  ConflictInfo conflict_;
  bool has_conflict_ = false;

  std::deque<int> queue_;
  std::vector<char> in_queue_;
  std::array<std::vector<int>, 2> cnt_;
  std::array<std::vector<int>, 2> touched_;
  std::vector<char> cell_touched_;
  std::vector<int> affected_;
  std::array<std::vector<std::pair<int, int>>, 2> order_scratch_;  // (count, old position)
  std::array<std::vector<std::pair<int, int>>, 2> plan_scratch_;   // (count, fragment size)
};

}  // namespace symcan::detail
