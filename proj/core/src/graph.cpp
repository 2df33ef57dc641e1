#include "symcan/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace symcan {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v])
      throw std::invalid_argument("Permutation: image is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size())
    throw std::invalid_argument("Permutation::compose: size mismatch");
  std::vector<int> image(inner.size());
  for (int i = 0; i < inner.size(); ++i) image[i] = outer(inner(i));
  return Permutation(std::move(image));
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<char> seen(image_.size(), 0);
  for (int start = 0; start < size(); ++start) {
    if (seen[start] || image_[start] == start) continue;
    out += '(';
    int v = start;
    bool first = true;
    while (!seen[v]) {
      seen[v] = 1;
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
      v = image_[v];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges, std::vector<int> colors)
    : n_(n), m_(static_cast<int>(edges.size())), adj_(n), colors_(std::move(colors)) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  if (colors_.empty()) colors_.assign(n, 0);
  if (static_cast<int>(colors_.size()) != n)
    throw std::invalid_argument("Graph: color vector size mismatch");
  for (int c : colors_)
    if (c < 0) throw std::invalid_argument("Graph: negative color");
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& a = adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw std::invalid_argument("Graph: duplicate edge");
  }
}

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph apply_permutation(const Graph& g, const Permutation& gamma) {
  if (gamma.size() != g.vertex_count())
    throw std::invalid_argument("apply_permutation: size mismatch");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(gamma(u), gamma(v));
  std::vector<int> colors(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) colors[gamma(v)] = g.color(v);
  return Graph(g.vertex_count(), edges, std::move(colors));
}

bool is_automorphism(const Graph& g, const Permutation& gamma) {
  if (gamma.size() != g.vertex_count())
    throw std::invalid_argument("is_automorphism: size mismatch");
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.color(gamma(v)) != g.color(v)) return false;
    if (g.degree(gamma(v)) != g.degree(v)) return false;
    for (int u : g.neighbors(v))
      if (!g.has_edge(gamma(v), gamma(u))) return false;
  }
  return true;
}

Graph matching_graph(int k) {
  if (k < 1) throw std::invalid_argument("matching_graph: k must be positive");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(k);
  for (int i = 0; i < k; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return Graph(2 * k, edges);
}

Graph square_triangle_graph() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {4, 6}});
}

std::pair<Graph, Permutation> random_relabel(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> image(g.vertex_count());
  std::iota(image.begin(), image.end(), 0);
  // Fisher-Yates with explicit draws so results are identical on every platform.
  for (int i = g.vertex_count() - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(image[i], image[j]);
  }
  Permutation gamma(std::move(image));
  return {apply_permutation(g, gamma), gamma};
}

}  // namespace symcan
