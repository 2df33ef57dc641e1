#include "symcan/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "refine_engine.hpp"

namespace symcan {

OrderedPartition::OrderedPartition(std::vector<int> elements, std::vector<int> cell_ends)
    : elements_(std::move(elements)), cell_ends_(std::move(cell_ends)) {
  int n = static_cast<int>(elements_.size());
  std::vector<char> seen(n, 0);
  for (int v : elements_) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("OrderedPartition: elements must cover 0..n-1 exactly once");
    seen[v] = 1;
  }
  int prev = 0;
  for (int end : cell_ends_) {
    if (end <= prev || end > n) throw std::invalid_argument("OrderedPartition: bad cell bounds");
    prev = end;
  }
  if (n > 0 && (cell_ends_.empty() || cell_ends_.back() != n))
    throw std::invalid_argument("OrderedPartition: cells must cover all vertices");
  position_.resize(n);
  for (int p = 0; p < n; ++p) position_[elements_[p]] = p;
}

OrderedPartition OrderedPartition::unit(int n) {
  if (n == 0) return OrderedPartition({}, {});
  std::vector<int> elements(n);
  for (int i = 0; i < n; ++i) elements[i] = i;
  return OrderedPartition(std::move(elements), {n});
}

OrderedPartition OrderedPartition::from_cells(int n, const std::vector<std::vector<int>>& cells) {
  std::vector<int> elements;
  std::vector<int> ends;
  elements.reserve(n);
  for (const auto& cell : cells) {
    elements.insert(elements.end(), cell.begin(), cell.end());
    ends.push_back(static_cast<int>(elements.size()));
  }
  if (static_cast<int>(elements.size()) != n)
    throw std::invalid_argument("OrderedPartition::from_cells: cells do not cover 0..n-1");
  return OrderedPartition(std::move(elements), std::move(ends));
}

std::span<const int> OrderedPartition::cell(int i) const {
  int begin = i == 0 ? 0 : cell_ends_[i - 1];
  return {elements_.data() + begin, static_cast<std::size_t>(cell_ends_[i] - begin)};
}

int OrderedPartition::cell_size(int i) const {
  int begin = i == 0 ? 0 : cell_ends_[i - 1];
  return cell_ends_[i] - begin;
}

int OrderedPartition::cell_index_of(int v) const {
  int p = position_[v];
  return static_cast<int>(std::upper_bound(cell_ends_.begin(), cell_ends_.end(), p) -
                          cell_ends_.begin());
}

OrderedPartition OrderedPartition::applied(const Permutation& gamma) const {
  std::vector<int> elements(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) elements[i] = gamma(elements_[i]);
  return OrderedPartition(std::move(elements), cell_ends_);
}

std::string OrderedPartition::to_string() const {
  std::string out = "[";
  for (int i = 0; i < cell_count(); ++i) {
    if (i > 0) out += '|';
    auto c = cell(i);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(c[j]);
    }
  }
  out += ']';
  return out;
}

OrderedPartition initial_partition(const Graph& g) {
  std::map<int, std::vector<int>> by_color;
  for (int v = 0; v < g.vertex_count(); ++v) by_color[g.color(v)].push_back(v);
  std::vector<std::vector<int>> cells;
  cells.reserve(by_color.size());
  for (auto& [color, members] : by_color) cells.push_back(std::move(members));
  return OrderedPartition::from_cells(g.vertex_count(), cells);
}

OrderedPartition refine(const Graph& g, const OrderedPartition& pi) {
  if (pi.vertex_count() != g.vertex_count())
    throw std::invalid_argument("refine: partition size mismatch");
  if (pi.vertex_count() == 0) return pi;
  detail::PartitionEngine engine(g, pi);
  engine.refine_from_all_cells();
  return engine.to_partition(0);
}

OrderedPartition individualize(const OrderedPartition& pi, int cell_index, int v) {
  if (cell_index < 0 || cell_index >= pi.cell_count())
    throw std::invalid_argument("individualize: cell index out of range");
  auto c = pi.cell(cell_index);
  if (c.size() < 2) throw std::invalid_argument("individualize: cell is a singleton");
  if (std::find(c.begin(), c.end(), v) == c.end())
    throw std::invalid_argument("individualize: vertex not in cell");

  std::vector<int> elements = pi.flattened();
  int begin = cell_index == 0 ? 0 : pi.cell_ends()[cell_index - 1];
  int end = pi.cell_ends()[cell_index];
  // v first, remainder keeps its order.
  std::vector<int> rest;
  rest.reserve(end - begin - 1);
  for (int p = begin; p < end; ++p)
    if (elements[p] != v) rest.push_back(elements[p]);
  elements[begin] = v;
  std::copy(rest.begin(), rest.end(), elements.begin() + begin + 1);

  std::vector<int> ends = pi.cell_ends();
  ends.insert(ends.begin() + cell_index, begin + 1);
  return OrderedPartition(std::move(elements), std::move(ends));
}

}  // namespace symcan
