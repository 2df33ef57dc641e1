#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symcan/permutation.hpp"

namespace symcan {

// Colored undirected graph on vertices 0..n-1. Adjacency lists are kept
// sorted ascending; no self-loops, no duplicate edges. Immutable after
// construction and safe to share across threads.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges, std::vector<int> colors = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  int color(int v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }

  // All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<int> colors_;
};

Graph apply_permutation(const Graph& g, const Permutation& gamma);
bool is_automorphism(const Graph& g, const Permutation& gamma);

// k disjoint edges (2i, 2i+1) on 2k vertices; |Aut| = 2^k * k!.
Graph matching_graph(int k);

// 7 vertices, 7 edges, every degree 2: the 4-cycle 0-1-2-3 plus the
// triangle 4-5-6. |Aut| = 48.
Graph square_triangle_graph();

// Relabel g by a uniformly drawn permutation from a seeded deterministic
// generator. Returns (relabeled graph, the permutation used).
std::pair<Graph, Permutation> random_relabel(const Graph& g, std::uint64_t seed);

}  // namespace symcan
