#include "symcan/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symcan {
namespace {

constexpr int kMaxOracleVertices = 8;

void check_size(const Graph& g, const char* who) {
  if (g.vertex_count() > kMaxOracleVertices)
    throw std::invalid_argument(std::string(who) + ": refused for n > 8");
}

}  // namespace

OracleGroup brute_force_automorphisms(const Graph& g) {
  check_size(g, "brute_force_automorphisms");
  int n = g.vertex_count();
  OracleGroup group;
  group.orbit_partition = OrbitPartition(n);
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  do {
    Permutation gamma(image);
    if (is_automorphism(g, gamma)) {
      group.orbit_partition.merge_permutation(gamma);
      group.elements.push_back(std::move(gamma));
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return group;
}

Graph brute_force_canonical(const Graph& g) {
  check_size(g, "brute_force_canonical");
  int n = g.vertex_count();
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);

  auto edges = g.edges();
  std::vector<int> best_colors, colors(n);
  std::vector<std::pair<int, int>> best_edges, relabeled(edges.size());
  bool have_best = false;
  do {
    for (int v = 0; v < n; ++v) colors[image[v]] = g.color(v);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      int u = image[edges[i].first], v = image[edges[i].second];
      relabeled[i] = {std::min(u, v), std::max(u, v)};
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (!have_best || colors < best_colors ||
        (colors == best_colors && relabeled < best_edges)) {
      best_colors = colors;
      best_edges = relabeled;
      have_best = true;
    }
  } while (std::next_permutation(image.begin(), image.end()));

  if (!have_best) return g;  // n == 0
  return Graph(n, best_edges, std::move(best_colors));
}

std::vector<OrbitPartition> stabilizer_chain_orbits(const OracleGroup& group,
                                                    const std::vector<int>& sequence) {
  int n = group.orbit_partition.size();
  std::vector<OrbitPartition> levels;
  levels.reserve(sequence.size() + 1);
  for (std::size_t l = 0; l <= sequence.size(); ++l) {
    OrbitPartition orbits(n);
    for (const Permutation& gamma : group.elements) {
      bool fixes_prefix = true;
      for (std::size_t i = 0; i < l; ++i) {
        if (gamma(sequence[i]) != sequence[i]) {
          fixes_prefix = false;
          break;
        }
      }
      if (fixes_prefix) orbits.merge_permutation(gamma);
    }
    levels.push_back(std::move(orbits));
  }
  return levels;
}

}  // namespace symcan
