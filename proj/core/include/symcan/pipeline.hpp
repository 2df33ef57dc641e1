#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "symcan/canonical_search.hpp"
#include "symcan/symmetry_search.hpp"

namespace symcan {

struct PhaseStats {
  std::uint64_t nodes = 0;
  double millis = 0.0;

  friend bool operator==(const PhaseStats& a, const PhaseStats& b) = default;
};

struct PipelineResult {
  CanonicalResult canonical;
  SymmetryReport symmetry;
  // 0: decomposition (left path), 1: symmetry search, 2: resumed labeling search.
  std::array<PhaseStats, 3> phases;

  std::uint64_t total_nodes() const {
    return phases[0].nodes + phases[1].nodes + phases[2].nodes;
  }
  double total_millis() const {
    return phases[0].millis + phases[1].millis + phases[2].millis;
  }
};

struct PipelineOptions {
  CellSelector selector = CellSelector::FirstNonSingleton;
  SearchLimits limits;
};

// Combined canonical labeling: run the decomposition left path once, hand the
// stabilizer sequence to the symmetry search, then resume the labeling search
// with the level-by-level orbit partitions pruning decomposition branches and
// symmetry detection disabled. The canonical form is identical to
// search_canonical's; only the cost changes.
PipelineResult canonical_label_combined(const Graph& g, const PipelineOptions& options = {});

// Machine-parsable phase accounting: one key=value per line plus totals.
std::string phase_stats(const PipelineResult& result);
// Inverse of phase_stats for the nodes/millis fields; throws on bad input.
std::array<PhaseStats, 3> parse_phase_stats(const std::string& text);

}  // namespace symcan
