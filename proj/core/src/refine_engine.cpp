#include "refine_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace symcan::detail {

PartitionEngine::PartitionEngine(const Graph& g, const OrderedPartition& row0)
    : g_(&g), n_(row0.vertex_count()), rows_(1) {
  init_layout(row0);
  init_row(0, row0);
}

PartitionEngine::PartitionEngine(const Graph& g, const OrderedPartition& top,
                                 const OrderedPartition& bottom)
    : g_(&g), n_(top.vertex_count()), rows_(2) {
  if (top.cell_ends() != bottom.cell_ends())
    throw std::invalid_argument("PartitionEngine: rows are not isomorphic");
  init_layout(top);
  init_row(0, top);
  init_row(1, bottom);
}

void PartitionEngine::init_layout(const OrderedPartition& p) {
  cells_ = p.cell_count();
  cell_start_.assign(n_, 0);
  cell_size_.assign(n_, 0);
  int begin = 0;
  for (int end : p.cell_ends()) {
    cell_size_[begin] = end - begin;
    for (int i = begin; i < end; ++i) cell_start_[i] = begin;
    begin = end;
  }
  pinned_.clear();
  pinned_at_.assign(n_, -1);
  in_queue_.assign(n_, 0);
  cell_touched_.assign(n_, 0);
  for (int r = 0; r < 2; ++r) cnt_[r].assign(n_, 0);
}

void PartitionEngine::init_row(int row, const OrderedPartition& p) {
  elems_[row] = p.flattened();
  pos_[row].assign(n_, 0);
  for (int i = 0; i < n_; ++i) pos_[row][elems_[row][i]] = i;
  if (row == 0) {
    for (int b = 0; b < n_; b = next_begin(b))
      if (cell_size_[b] == 1) pin(elems_[0][b]);
  }
}

void PartitionEngine::pin(int v) {
  pinned_at_[v] = static_cast<int>(pinned_.size());
  pinned_.push_back(v);
}

void PartitionEngine::rewind(const Mark& m) {
  while (trail_.size() > m.trail) {
    const SplitEvent& ev = trail_.back();
    for (int r = 0; r < rows_; ++r) {
      for (int i = ev.begin; i < ev.end; ++i) {
        int v = ev.saved[r][i - ev.begin];
        elems_[r][i] = v;
        pos_[r][v] = i;
      }
    }
    for (int i = ev.begin; i < ev.end; ++i) cell_start_[i] = ev.begin;
    cell_size_[ev.begin] = ev.end - ev.begin;
    trail_.pop_back();
  }
  cells_ = m.cells;
  while (pinned_.size() > m.pins) {
    pinned_at_[pinned_.back()] = -1;
    pinned_.pop_back();
  }
}

bool PartitionEngine::refine_from_all_cells() {
  for (int b = 0; b < n_; b = next_begin(b)) {
    if (!in_queue_[b]) {
      in_queue_[b] = 1;
      queue_.push_back(b);
    }
  }
  return process_queue();
}

bool PartitionEngine::refine_from(int begin_a, int begin_b) {
  for (int b : {begin_a, begin_b}) {
    if (!in_queue_[b]) {
      in_queue_[b] = 1;
      queue_.push_back(b);
    }
  }
  return process_queue();
}

void PartitionEngine::individualize_at(int begin, int top_vertex, int bottom_vertex) {
  int end = begin + cell_size_[begin];
  trail_.push_back({begin, end, {}});
  SplitEvent& ev = trail_.back();
  for (int r = 0; r < rows_; ++r) {
    int v = r == 0 ? top_vertex : bottom_vertex;
    ev.saved[r].assign(elems_[r].begin() + begin, elems_[r].begin() + end);
    int w = begin + 1;
    for (int x : ev.saved[r]) {
      if (x == v) continue;
      elems_[r][w] = x;
      pos_[r][x] = w;
      ++w;
    }
    elems_[r][begin] = v;
    pos_[r][v] = begin;
  }
  cell_size_[begin] = 1;
  cell_size_[begin + 1] = end - begin - 1;
  for (int i = begin + 1; i < end; ++i) cell_start_[i] = begin + 1;
  ++cells_;
  pin(elems_[0][begin]);
  if (end - begin - 1 == 1) pin(elems_[0][begin + 1]);
}

OrderedPartition PartitionEngine::to_partition(int row) const {
  std::vector<int> ends;
  for (int b = 0; b < n_; b = next_begin(b)) ends.push_back(b + cell_size_[b]);
  return OrderedPartition(elems_[row], std::move(ends));
}

OrderedPartition PartitionEngine::to_partition_with_conflict(int row) const {
  if (!has_conflict_) return to_partition(row);
  std::vector<int> elements = elems_[row];
  std::copy(conflict_.ordered[row].begin(), conflict_.ordered[row].end(),
            elements.begin() + conflict_.begin);
  std::vector<int> ends;
  for (int b = 0; b < n_; b = next_begin(b)) {
    if (b == conflict_.begin) {
      int fb = b;
      for (int sz : conflict_.fragment_sizes[row]) {
        fb += sz;
        ends.push_back(fb);
      }
    } else {
      ends.push_back(b + cell_size_[b]);
    }
  }
  return OrderedPartition(std::move(elements), std::move(ends));
}

bool PartitionEngine::process_queue() {
  while (!queue_.empty()) {
    int sb = queue_.front();
    queue_.pop_front();
    in_queue_[sb] = 0;
    if (!process_splitter(sb)) {
      for (int b : queue_) in_queue_[b] = 0;
      queue_.clear();
      return false;
    }
  }
  return true;
}

bool PartitionEngine::process_splitter(int begin) {
  int ssize = cell_size_[begin];
  for (int r = 0; r < rows_; ++r) {
    for (int i = begin; i < begin + ssize; ++i) {
      for (int u : g_->neighbors(elems_[r][i])) {
        if (cnt_[r][u]++ == 0) touched_[r].push_back(u);
      }
    }
  }

  affected_.clear();
  for (int r = 0; r < rows_; ++r) {
    for (int u : touched_[r]) {
      int b = cell_start_[pos_[r][u]];
      if (cell_size_[b] > 1 && !cell_touched_[b]) {
        cell_touched_[b] = 1;
        affected_.push_back(b);
      }
    }
  }
  std::sort(affected_.begin(), affected_.end());

  bool ok = true;
  for (int b : affected_) {
    if (ok) ok = split_cell(b);
  }

  for (int b : affected_) cell_touched_[b] = 0;
  for (int r = 0; r < rows_; ++r) {
    for (int u : touched_[r]) cnt_[r][u] = 0;
    touched_[r].clear();
  }
  return ok;
}

bool PartitionEngine::split_cell(int begin) {
  int end = begin + cell_size_[begin];
  for (int r = 0; r < rows_; ++r) {
    auto& order = order_scratch_[r];
    order.clear();
    for (int i = begin; i < end; ++i) order.emplace_back(cnt_[r][elems_[r][i]], i);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    auto& plan = plan_scratch_[r];
    plan.clear();
    for (const auto& [c, p] : order) {
      if (plan.empty() || plan.back().first != c)
        plan.emplace_back(c, 1);
      else
        ++plan.back().second;
    }
  }
  // Lockstep conflict: the encoded permutations must map equal neighbor
  // counts to equal neighbor counts, so both values and sizes must agree.
  if (rows_ == 2 && plan_scratch_[0] != plan_scratch_[1]) {
    has_conflict_ = true;
    conflict_.begin = begin;
    conflict_.end = end;
    for (int r = 0; r < 2; ++r) {
      conflict_.ordered[r].clear();
      for (const auto& [c, p] : order_scratch_[r]) conflict_.ordered[r].push_back(elems_[r][p]);
      conflict_.fragment_sizes[r].clear();
      for (const auto& [c, sz] : plan_scratch_[r]) conflict_.fragment_sizes[r].push_back(sz);
    }
    return false;
  }
  if (plan_scratch_[0].size() <= 1) return true;

  trail_.push_back({begin, end, {}});
  SplitEvent& ev = trail_.back();
  for (int r = 0; r < rows_; ++r) {
    ev.saved[r].assign(elems_[r].begin() + begin, elems_[r].begin() + end);
    const auto& order = order_scratch_[r];
    for (int k = 0; k < end - begin; ++k) {
      int v = ev.saved[r][order[k].second - begin];
      elems_[r][begin + k] = v;
      pos_[r][v] = begin + k;
    }
  }

  int fb = begin;
  for (const auto& [count, sz] : plan_scratch_[0]) {
    (void)count;
    for (int i = fb; i < fb + sz; ++i) cell_start_[i] = fb;
    cell_size_[fb] = sz;
    if (sz == 1) pin(elems_[0][fb]);
    if (!in_queue_[fb]) {
      in_queue_[fb] = 1;
      queue_.push_back(fb);
    }
    fb += sz;
  }
  cells_ += static_cast<int>(plan_scratch_[0].size()) - 1;
  return true;
}

}  // namespace symcan::detail
