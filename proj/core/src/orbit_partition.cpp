#include "symcan/orbit_partition.hpp"

#include <algorithm>
#include <numeric>

namespace symcan {

OrbitPartition::OrbitPartition(int n) : parent_(n), size_(n, 1), orbit_count_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int OrbitPartition::find(int v) const {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];  // path halving
    v = parent_[v];
  }
  return v;
}

void OrbitPartition::unite(int u, int v) {
  int ru = find(u), rv = find(v);
  if (ru == rv) return;
  if (size_[ru] < size_[rv]) std::swap(ru, rv);
  parent_[rv] = ru;
  size_[ru] += size_[rv];
  --orbit_count_;
}

void OrbitPartition::merge_permutation(const Permutation& gamma) {
  for (int v = 0; v < gamma.size(); ++v) {
    if (gamma(v) != v) unite(v, gamma(v));
  }
}

std::vector<std::vector<int>> OrbitPartition::orbits() const {
  std::vector<std::vector<int>> by_root(size());
  for (int v = 0; v < size(); ++v) by_root[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& orbit : by_root) {
    if (!orbit.empty()) out.push_back(std::move(orbit));
  }
  // members are ascending already; order orbits by smallest member
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::string OrbitPartition::to_string() const {
  std::string out = "[";
  bool first_cell = true;
  for (const auto& orbit : orbits()) {
    if (!first_cell) out += '|';
    first_cell = false;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(orbit[i]);
    }
  }
  out += ']';
  return out;
}

}  // namespace symcan
