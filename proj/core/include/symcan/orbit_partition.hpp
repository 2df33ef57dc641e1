#pragma once

#include <string>
#include <vector>

#include "symcan/permutation.hpp"

namespace symcan {

// Union-find over {0..n-1} tracking the orbits induced by a growing set of
// permutations. Merging a generator keeps the relation an equivalence:
// orbit(v) == orbit(gamma(v)) for every v afterwards.
class OrbitPartition {
 public:
  OrbitPartition() = default;
  explicit OrbitPartition(int n);

  int size() const { return static_cast<int>(parent_.size()); }
  int find(int v) const;
  bool same_orbit(int u, int v) const { return find(u) == find(v); }
  void unite(int u, int v);

  // Merge v ~ gamma(v) for every moved vertex.
  void merge_permutation(const Permutation& gamma);

  int orbit_size(int v) const { return size_[find(v)]; }
  int orbit_count() const { return orbit_count_; }

  // Orbits as sorted vertex lists, ordered by smallest member.
  std::vector<std::vector<int>> orbits() const;
  std::string to_string() const;  // "[0,1,2,3|4,5,6]"

  friend bool operator==(const OrbitPartition& a, const OrbitPartition& b) {
    return a.orbits() == b.orbits();
  }

 private:
  mutable std::vector<int> parent_;
  std::vector<int> size_;
  int orbit_count_ = 0;
};

}  // namespace symcan
