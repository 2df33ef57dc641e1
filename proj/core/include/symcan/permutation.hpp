#pragma once

#include <string>
#include <vector>

namespace symcan {

// Bijection on {0..n-1}. Immutable after construction.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);  // throws std::invalid_argument if not a bijection

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  const std::vector<int>& image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;

  // compose(outer, inner)(v) == outer(inner(v))
  static Permutation compose(const Permutation& outer, const Permutation& inner);

  // Cycle notation with fixed points omitted, e.g. "(0 3)(1 2)"; identity is "()".
  std::string cycle_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> image_;
};

}  // namespace symcan
