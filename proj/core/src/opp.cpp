#include "symcan/opp.hpp"

#include <algorithm>
#include <stdexcept>

#include "refine_engine.hpp"

namespace symcan {
namespace {

bool cells_element_identical(std::span<const int> a, std::span<const int> b,
                             std::vector<char>& scratch) {
  for (int v : a) scratch[v] = 1;
  bool same = true;
  for (int v : b) {
    if (!scratch[v]) {
      same = false;
      break;
    }
  }
  for (int v : a) scratch[v] = 0;
  return same;
}

}  // namespace

OppClass classify(const Opp& opp) {
  if (!opp.is_isomorphic()) return OppClass::NonIsomorphic;
  if (opp.top.is_discrete()) return OppClass::Discrete;
  std::vector<char> scratch(opp.top.vertex_count(), 0);
  for (int i = 0; i < opp.top.cell_count(); ++i) {
    if (opp.top.cell_size(i) == 1) continue;
    if (!cells_element_identical(opp.top.cell(i), opp.bottom.cell(i), scratch))
      return OppClass::Active;
  }
  return OppClass::Matching;
}

std::pair<Opp, OppClass> refine_opp(const Graph& g, const Opp& opp) {
  if (!opp.is_isomorphic()) throw std::invalid_argument("refine_opp: pair is not isomorphic");
  if (opp.top.vertex_count() != g.vertex_count())
    throw std::invalid_argument("refine_opp: partition size mismatch");
  if (opp.top.vertex_count() == 0) return {opp, OppClass::Discrete};
  detail::PartitionEngine engine(g, opp.top, opp.bottom);
  bool ok = engine.refine_from_all_cells();
  if (!ok) {
    Opp conflicted{engine.to_partition_with_conflict(0), engine.to_partition_with_conflict(1)};
    return {std::move(conflicted), OppClass::NonIsomorphic};
  }
  Opp refined{engine.to_partition(0), engine.to_partition(1)};
  OppClass cls = classify(refined);
  return {std::move(refined), cls};
}

Opp individualize_pair(const Opp& opp, int cell_index, int top_vertex, int bottom_vertex) {
  return {individualize(opp.top, cell_index, top_vertex),
          individualize(opp.bottom, cell_index, bottom_vertex)};
}

BigUint permutation_count(const Opp& opp) {
  if (!opp.is_isomorphic()) return BigUint(0);
  BigUint count(1);
  for (int i = 0; i < opp.top.cell_count(); ++i) count.mul_factorial(opp.top.cell_size(i));
  return count;
}

Permutation extract_permutation(const Opp& opp) {
  OppClass cls = classify(opp);
  if (cls != OppClass::Discrete && cls != OppClass::Matching)
    throw std::invalid_argument("extract_permutation: pair is neither discrete nor matching");
  int n = opp.top.vertex_count();
  std::vector<int> image(n);
  for (int v = 0; v < n; ++v) image[v] = v;  // non-singleton cells stay fixed
  for (int i = 0; i < opp.top.cell_count(); ++i) {
    if (opp.top.cell_size(i) != 1) continue;
    image[opp.top.cell(i)[0]] = opp.bottom.cell(i)[0];
  }
  return Permutation(std::move(image));
}

}  // namespace symcan
