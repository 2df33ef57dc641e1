#pragma once

#include <span>
#include <string>
#include <vector>

#include "symcan/graph.hpp"

namespace symcan {

// Ordered partition of {0..n-1}: a sequence of non-empty disjoint cells whose
// order is significant, as is the element order inside each cell. Value type;
// the searches keep their own mutable state.
class OrderedPartition {
 public:
  OrderedPartition() = default;

  static OrderedPartition unit(int n);
  static OrderedPartition from_cells(int n, const std::vector<std::vector<int>>& cells);

  // Internal constructor from flattened form: elements plus exclusive cell ends.
  OrderedPartition(std::vector<int> elements, std::vector<int> cell_ends);

  int vertex_count() const { return static_cast<int>(elements_.size()); }
  int cell_count() const { return static_cast<int>(cell_ends_.size()); }
  std::span<const int> cell(int i) const;
  int cell_size(int i) const;

  bool is_discrete() const { return cell_count() == vertex_count(); }
  bool is_unit() const { return cell_count() == 1 && vertex_count() >= 1; }

  // Index of v in the concatenation of cells.
  int position_of(int v) const { return position_[v]; }
  int cell_index_of(int v) const;
  const std::vector<int>& flattened() const { return elements_; }
  const std::vector<int>& cell_ends() const { return cell_ends_; }

  // Elementwise image under gamma; cell structure unchanged.
  OrderedPartition applied(const Permutation& gamma) const;

  std::string to_string() const;  // "[a,b|c|d,e]"

  friend bool operator==(const OrderedPartition& a, const OrderedPartition& b) {
    return a.elements_ == b.elements_ && a.cell_ends_ == b.cell_ends_;
  }

 private:
  std::vector<int> elements_;
  std::vector<int> cell_ends_;
  std::vector<int> position_;
};

// One cell per color class, ordered by ascending color, vertices ascending
// within a cell. Unit partition for uniformly colored graphs.
OrderedPartition initial_partition(const Graph& g);

// Coarsest equitable refinement of pi w.r.t. g under the fixed splitting
// convention: FIFO work-list seeded with all cells; a cell splitting against
// a splitter is rewritten in place with fragments ordered by ascending
// neighbor count (stable within a fragment); all fragments join the list.
OrderedPartition refine(const Graph& g, const OrderedPartition& pi);

// Split {v} out of its cell, singleton placed before the remainder.
OrderedPartition individualize(const OrderedPartition& pi, int cell_index, int v);

}  // namespace symcan
