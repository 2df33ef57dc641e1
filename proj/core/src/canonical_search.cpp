#include "symcan/canonical_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "canonical_searcher.hpp"

namespace symcan {

CertFragment node_certificate_fragment(const Graph& g, const OrderedPartition& pi,
                                       const OrderedPartition* parent) {
  auto singleton_in = [](const OrderedPartition& p, int v) {
    int i = p.cell_index_of(v);
    return p.cell_size(i) == 1;
  };
  CertFragment frag;
  for (int i = 0; i < pi.cell_count(); ++i) {
    if (pi.cell_size(i) != 1) continue;
    int u = pi.cell(i)[0];
    for (int v : g.neighbors(u)) {
      bool v_singleton = singleton_in(pi, v);
      if (v_singleton && v < u) continue;  // both singletons: visit from the smaller endpoint
      if (parent && singleton_in(*parent, u) && v_singleton && singleton_in(*parent, v)) continue;
      int pu = pi.position_of(u), pv = pi.position_of(v);
      frag.emplace_back(std::min(pu, pv), std::max(pu, pv));
    }
  }
  std::sort(frag.begin(), frag.end());
  return frag;
}

int cell_selector_first(const OrderedPartition& pi) {
  if (pi.is_discrete()) throw std::invalid_argument("cell_selector_first: partition is discrete");
  for (int i = 0; i < pi.cell_count(); ++i)
    if (pi.cell_size(i) > 1) return i;
  return -1;
}

int cell_selector_max_nonuniform(const Graph& g, const OrderedPartition& pi) {
  if (pi.is_discrete())
    throw std::invalid_argument("cell_selector_max_nonuniform: partition is discrete");
  int best = -1, best_count = -1;
  std::vector<int> joined(pi.cell_count(), 0);
  for (int i = 0; i < pi.cell_count(); ++i) {
    if (pi.cell_size(i) <= 1) continue;
    // pi is equitable, so any member's counts represent the cell.
    int v0 = pi.cell(i)[0];
    std::vector<int> touched;
    for (int u : g.neighbors(v0)) {
      int j = pi.cell_index_of(u);
      if (joined[j]++ == 0) touched.push_back(j);
    }
    int count = 0;
    for (int j : touched) {
      if (j != i && joined[j] < pi.cell_size(j)) ++count;
      joined[j] = 0;
    }
    if (count > best_count) {
      best_count = count;
      best = i;
    }
  }
  return best;
}

std::optional<Permutation> left_path_early_symmetry(const Graph& g,
                                                    const OrderedPartition& current,
                                                    const OrderedPartition& leftmost) {
  if (current.cell_ends() != leftmost.cell_ends()) return std::nullopt;
  int n = current.vertex_count();
  std::vector<int> image(n);
  for (int i = 0; i < current.cell_count(); ++i) {
    if (current.cell_size(i) == 1) {
      image[current.cell(i)[0]] = leftmost.cell(i)[0];
    } else {
      std::vector<int> a(current.cell(i).begin(), current.cell(i).end());
      std::vector<int> b(leftmost.cell(i).begin(), leftmost.cell(i).end());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return std::nullopt;
      for (int v : a) image[v] = v;
    }
  }
  Permutation gamma(std::move(image));
  if (gamma.is_identity()) return std::nullopt;
  if (!is_automorphism(g, gamma)) return std::nullopt;
  return gamma;
}

CanonicalResult search_canonical(const Graph& g, const CanonicalOptions& options) {
  detail::CanonicalSearcher::Config config;
  config.selector = options.selector;
  config.early_symmetry = options.early_symmetry;
  config.symmetry_detection = true;
  config.limits = options.limits;
  detail::CanonicalSearcher searcher(g, config);
  searcher.build_left_path();
  searcher.explore();
  return searcher.result(g);
}

std::vector<int> decomposition_sequence(const Graph& g, CellSelector selector) {
  detail::CanonicalSearcher::Config config;
  config.selector = selector;
  detail::CanonicalSearcher searcher(g, config);
  searcher.build_left_path();
  return searcher.targets();
}

namespace detail {

CanonicalSearcher::CanonicalSearcher(const Graph& g, const Config& config)
    : g_(g), config_(config), engine_(g, initial_partition(g)) {}

int CanonicalSearcher::first_nonsingleton_begin() const {
  for (int b = 0; b < engine_.size(); b = engine_.next_begin(b))
    if (engine_.cell_size_at(b) > 1) return b;
  return -1;
}

int CanonicalSearcher::max_nonuniform_begin() const {
  int best = -1, best_count = -1;
  std::vector<int> joined(engine_.size(), 0);
  std::vector<int> touched;
  for (int b = 0; b < engine_.size(); b = engine_.next_begin(b)) {
    if (engine_.cell_size_at(b) <= 1) continue;
    int v0 = engine_.elem(0, b);
    touched.clear();
    for (int u : g_.neighbors(v0)) {
      int cb = engine_.cell_begin_of(0, u);
      if (joined[cb]++ == 0) touched.push_back(cb);
    }
    int count = 0;
    for (int cb : touched) {
      if (cb != b && joined[cb] < engine_.cell_size_at(cb)) ++count;
      joined[cb] = 0;
    }
    if (count > best_count) {
      best_count = count;
      best = b;
    }
  }
  return best;
}

int CanonicalSearcher::select_cell() const {
  return config_.selector == CellSelector::FirstNonSingleton ? first_nonsingleton_begin()
                                                             : max_nonuniform_begin();
}

CertFragment CanonicalSearcher::compute_fragment(std::size_t pins_before) const {
  CertFragment frag;
  const auto& pins = engine_.pinned_stack();
  // Edges gaining a newly pinned endpoint (the partner may be pinned or not).
  for (std::size_t idx = pins_before; idx < pins.size(); ++idx) {
    int w = pins[idx];
    int pw = engine_.pos(0, w);
    for (int x : g_.neighbors(w)) {
      int ix = engine_.pin_index(x);
      if (ix >= 0 && static_cast<std::size_t>(ix) > idx) continue;  // the later pin emits it
      int px = engine_.pos(0, x);
      frag.emplace_back(std::min(pw, px), std::max(pw, px));
    }
  }
  // Re-emissions: an old singleton against a still-unpinned endpoint keeps
  // appearing until the partner's position is pinned too.
  for (std::size_t idx = 0; idx < pins_before; ++idx) {
    int u = pins[idx];
    int pu = engine_.pos(0, u);
    for (int x : g_.neighbors(u)) {
      if (engine_.pin_index(x) >= 0) continue;
      int px = engine_.pos(0, x);
      frag.emplace_back(std::min(pu, px), std::max(pu, px));
    }
  }
  std::sort(frag.begin(), frag.end());
  return frag;
}

int CanonicalSearcher::compare_fragments(const CertFragment& a, const CertFragment& b) {
  std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

CanonicalSearcher::LeftNode CanonicalSearcher::snapshot_node() const {
  LeftNode node;
  node.mark = engine_.mark();
  if (!(config_.symmetry_detection && config_.early_symmetry)) return node;
  for (int b = 0; b < engine_.size(); b = engine_.next_begin(b)) {
    node.begins.push_back(b);
    int size = engine_.cell_size_at(b);
    std::vector<int> cell;
    if (size > 1) {
      cell.reserve(size);
      for (int i = b; i < b + size; ++i) cell.push_back(engine_.elem(0, i));
      std::sort(cell.begin(), cell.end());
    }
    node.sorted_cells.push_back(std::move(cell));
  }
  node.elems.resize(engine_.size());
  for (int p = 0; p < engine_.size(); ++p) node.elems[p] = engine_.elem(0, p);
  return node;
}

void CanonicalSearcher::build_left_path() {
  engine_.refine_from_all_cells();
  ++nodes_;
  path_frags_.assign(engine_.size() + 1, {});
  path_cmp_.assign(engine_.size() + 1, Cmp::Equal);
  path_left_eq_.assign(engine_.size() + 1, 1);

  LeftNode root = snapshot_node();
  root.frag = compute_fragment(0);
  path_frags_[0] = root.frag;
  left_.push_back(std::move(root));

  int depth = 0;
  while (!engine_.is_discrete()) {
    LeftNode& node = left_.back();
    node.selected_begin = select_cell();
    node.target = engine_.elem(0, node.selected_begin);
    targets_.push_back(node.target);

    std::size_t pins_before = engine_.pinned_stack().size();
    engine_.individualize_at(node.selected_begin, node.target);
    engine_.refine_from(node.selected_begin, node.selected_begin + 1);
    ++nodes_;
    ++depth;
    config_.limits.check(nodes_);

    LeftNode next = snapshot_node();
    next.frag = compute_fragment(pins_before);
    path_frags_[depth] = next.frag;
    left_.push_back(std::move(next));
  }

  left_depth_ = depth;
  ++leaves_;
  first_flat_.resize(engine_.size());
  best_pos_.resize(engine_.size());
  for (int p = 0; p < engine_.size(); ++p) {
    first_flat_[p] = engine_.elem(0, p);
    best_pos_[engine_.elem(0, p)] = p;
  }
  best_frags_.assign(path_frags_.begin(), path_frags_.begin() + depth + 1);
  best_depth_ = depth;

  level_orbits_.assign(left_depth_ + 1, OrbitPartition(g_.vertex_count()));
}

const OrbitPartition& CanonicalSearcher::orbits_at(int level) const {
  return external_orbits_ ? (*external_orbits_)[level] : level_orbits_[level];
}

void CanonicalSearcher::explore() {
  for (int l = left_depth_ - 1; l >= 0; --l) {
    const LeftNode& node = left_[l];
    engine_.rewind(node.mark);
    std::vector<int> explored = {node.target};
    // the rewind restored the node, so the selected cell is in node order
    int end = node.selected_begin + engine_.cell_size_at(node.selected_begin);
    std::vector<int> candidates;
    candidates.reserve(end - node.selected_begin);
    for (int i = node.selected_begin; i < end; ++i) candidates.push_back(engine_.elem(0, i));
    for (int v : candidates) {
      if (v == node.target) continue;
      bool pruned = false;
      const OrbitPartition& orbits = orbits_at(l);
      for (int c : explored) {
        if (orbits.same_orbit(v, c)) {
          pruned = true;
          break;
        }
      }
      if (pruned) continue;

      auto mark = engine_.mark();
      Outcome outcome = explore_node(node.selected_begin, v, l, l + 1);
      engine_.rewind(mark);
      explored.push_back(v);
      if (outcome == Outcome::Found) {
        generators_.push_back(found_gen_);
        std::vector<int> moved;
        for (int v = 0; v < found_gen_.size(); ++v)
          if (found_gen_(v) != v) moved.push_back(v);
        for (int j = 0; j <= l; ++j) {
          for (int v : moved) level_orbits_[j].unite(v, found_gen_(v));
        }
      }
    }
  }
}

CanonicalSearcher::Outcome CanonicalSearcher::explore_node(int begin, int v, int branch_level,
                                                           int depth) {
  std::size_t pins_before = engine_.pinned_stack().size();
  engine_.individualize_at(begin, v);
  engine_.refine_from(begin, begin + 1);
  ++nodes_;
  config_.limits.check(nodes_);

  if (static_cast<int>(path_frags_.size()) <= depth) {
    path_frags_.resize(depth + 1);
    path_cmp_.resize(depth + 1, Cmp::Equal);
    path_left_eq_.resize(depth + 1, 0);
  }
  CertFragment frag = compute_fragment(pins_before);

  bool left_eq = path_left_eq_[depth - 1] && depth <= left_depth_ &&
                 compare_fragments(frag, left_[depth].frag) == 0;
  Cmp cmp;
  if (path_cmp_[depth - 1] != Cmp::Equal) {
    cmp = path_cmp_[depth - 1];  // the first differing ancestor decides
  } else if (depth > best_depth_) {
    cmp = Cmp::Worse;
  } else {
    int c = compare_fragments(frag, best_frags_[depth]);
    cmp = c < 0 ? Cmp::Better : c > 0 ? Cmp::Worse : Cmp::Equal;
  }

  // A subtree that has left the left-path certificate cannot contain a
  // symmetry; if it cannot beat the best certificate either, drop it.
  if (cmp == Cmp::Worse && (!left_eq || !config_.symmetry_detection)) return Outcome::NotFound;

  path_frags_[depth] = std::move(frag);
  path_cmp_[depth] = cmp;
  path_left_eq_[depth] = left_eq ? 1 : 0;

  if (engine_.is_discrete()) {
    ++leaves_;
    if (config_.symmetry_detection && left_eq && depth == left_depth_) {
      Permutation gamma = leaf_permutation();
      if (!is_automorphism(g_, gamma))
        throw std::logic_error("canonical search: certificate-equal leaf failed verification");
      if (!gamma.is_identity()) {
        found_gen_ = std::move(gamma);
        return Outcome::Found;
      }
      return Outcome::NotFound;
    }
    if (cmp == Cmp::Better || (cmp == Cmp::Equal && depth < best_depth_)) update_best(depth);
    return Outcome::NotFound;
  }

  if (config_.symmetry_detection && config_.early_symmetry && depth <= left_depth_) {
    Outcome early = try_early_symmetry(depth);
    if (early == Outcome::Found) return early;
  }

  int sel_begin = select_cell();
  int end = sel_begin + engine_.cell_size_at(sel_begin);
  std::vector<int> candidates;
  candidates.reserve(end - sel_begin);
  for (int i = sel_begin; i < end; ++i) candidates.push_back(engine_.elem(0, i));

  for (int u : candidates) {
    auto mark = engine_.mark();
    Outcome outcome = explore_node(sel_begin, u, branch_level, depth + 1);
    engine_.rewind(mark);
    if (outcome == Outcome::Found) return outcome;
  }
  return Outcome::NotFound;
}

CanonicalSearcher::Outcome CanonicalSearcher::try_early_symmetry(int depth) {
  const LeftNode& left = left_[depth];
  // Same cell layout?
  std::size_t k = 0;
  for (int b = 0; b < engine_.size(); b = engine_.next_begin(b), ++k) {
    if (k >= left.begins.size() || left.begins[k] != b) return Outcome::NotFound;
  }
  if (k != left.begins.size()) return Outcome::NotFound;

  // Non-singleton cells must be element-identical; singletons map positionwise.
  std::vector<int> image(g_.vertex_count());
  std::vector<int> members;
  k = 0;
  for (int b = 0; b < engine_.size(); b = engine_.next_begin(b), ++k) {
    int size = engine_.cell_size_at(b);
    if (size == 1) {
      image[engine_.elem(0, b)] = left.elems[b];
      continue;
    }
    members.clear();
    for (int i = b; i < b + size; ++i) members.push_back(engine_.elem(0, i));
    std::sort(members.begin(), members.end());
    if (members != left.sorted_cells[k]) return Outcome::NotFound;
    for (int v : members) image[v] = v;
  }
  Permutation gamma(std::move(image));
  if (gamma.is_identity()) return Outcome::NotFound;
  if (!is_automorphism(g_, gamma)) return Outcome::NotFound;
  found_gen_ = std::move(gamma);
  return Outcome::Found;
}

Permutation CanonicalSearcher::leaf_permutation() const {
  std::vector<int> image(g_.vertex_count());
  for (int p = 0; p < engine_.size(); ++p) image[first_flat_[p]] = engine_.elem(0, p);
  return Permutation(std::move(image));
}

void CanonicalSearcher::update_best(int depth) {
  for (int p = 0; p < engine_.size(); ++p) best_pos_[engine_.elem(0, p)] = p;
  best_frags_.assign(path_frags_.begin(), path_frags_.begin() + depth + 1);
  best_depth_ = depth;
  for (int j = 0; j <= depth; ++j) path_cmp_[j] = Cmp::Equal;
}

CanonicalResult CanonicalSearcher::result(const Graph& g) const {
  CanonicalResult r;
  r.canonical_labeling = Permutation(best_pos_);
  r.canonical_form = apply_permutation(g, r.canonical_labeling);
  r.generators = generators_;
  r.group_order = BigUint(1);
  for (int l = 0; l < left_depth_; ++l)
    r.group_order *= level_orbits_[l].orbit_size(left_[l].target);
  r.nodes_explored = nodes_;
  r.leaves_visited = leaves_;
  return r;
}

}  // namespace detail
}  // namespace symcan
