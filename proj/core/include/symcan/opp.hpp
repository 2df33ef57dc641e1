#pragma once

#include <utility>

#include "symcan/big_uint.hpp"
#include "symcan/partition.hpp"

namespace symcan {

// Classification of an ordered partition pair. Discrete takes precedence
// over Matching: a discrete pair already names a single permutation.
enum class OppClass { NonIsomorphic, Discrete, Matching, Active };

// Ordered partition pair: the top and bottom rows jointly encode a set of
// permutations mapping each top cell onto the corresponding bottom cell.
struct Opp {
  OrderedPartition top;
  OrderedPartition bottom;

  static Opp unit(int n) { return {OrderedPartition::unit(n), OrderedPartition::unit(n)}; }

  bool is_isomorphic() const { return top.cell_ends() == bottom.cell_ends(); }

  friend bool operator==(const Opp& a, const Opp& b) = default;
};

OppClass classify(const Opp& opp);

// Refine both rows in lockstep with identical splitter choices. Stops at the
// first divergence of the split patterns and reports NonIsomorphic; the pair
// is then returned in its state at conflict detection.
std::pair<Opp, OppClass> refine_opp(const Graph& g, const Opp& opp);

// Individualize top_vertex / bottom_vertex out of the same cell index.
Opp individualize_pair(const Opp& opp, int cell_index, int top_vertex, int bottom_vertex);

// Product of |T_i|! over the top cells; 0 for a non-isomorphic pair (it
// encodes the empty permutation set).
BigUint permutation_count(const Opp& opp);

// Discrete: the permutation mapping each top singleton to its bottom
// counterpart. Matching: singletons map positionwise, vertices of
// non-singleton cells are fixed. Anything else is a contract violation.
Permutation extract_permutation(const Opp& opp);

}  // namespace symcan
