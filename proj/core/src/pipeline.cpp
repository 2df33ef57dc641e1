#include "symcan/pipeline.hpp"

#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "canonical_searcher.hpp"

namespace symcan {
namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

PipelineResult canonical_label_combined(const Graph& g, const PipelineOptions& options) {
  PipelineResult result;

  // Phase 1: decomposition along the left-most path, kept alive for phase 3.
  auto t0 = std::chrono::steady_clock::now();
  detail::CanonicalSearcher::Config config;
  config.selector = options.selector;
  config.symmetry_detection = false;
  config.early_symmetry = false;
  config.limits = options.limits;
  detail::CanonicalSearcher searcher(g, config);
  searcher.build_left_path();
  std::uint64_t phase1_nodes = searcher.nodes_explored();
  result.phases[0] = {phase1_nodes, elapsed_ms(t0)};

  // Phase 2: symmetry search forced onto the same stabilizer sequence.
  auto t1 = std::chrono::steady_clock::now();
  SymmetrySearchOptions sym_options;
  sym_options.forced_sequence = searcher.targets();
  sym_options.limits = options.limits;
  result.symmetry = search_automorphisms(g, sym_options);
  result.phases[1] = {result.symmetry.nodes_explored, elapsed_ms(t1)};

  // Phase 3: resume with the handed-over orbit partitions; isomorphic
  // decomposition branches are skipped, symmetry detection stays off.
  auto t2 = std::chrono::steady_clock::now();
  searcher.set_external_orbits(&result.symmetry.level_orbits);
  searcher.explore();
  result.canonical = searcher.result(g);
  result.phases[2] = {searcher.nodes_explored() - phase1_nodes, elapsed_ms(t2)};

  // The resumed search reports no group data of its own.
  result.canonical.generators = result.symmetry.generators;
  result.canonical.group_order = result.symmetry.group_order;
  return result;
}

std::string phase_stats(const PipelineResult& result) {
  std::ostringstream out;
  out.precision(17);  // lossless double round-trip
  const char* names[3] = {"phase1", "phase2", "phase3"};
  for (int i = 0; i < 3; ++i) {
    out << names[i] << "_nodes=" << result.phases[i].nodes << "\n";
    out << names[i] << "_millis=" << result.phases[i].millis << "\n";
  }
  out << "total_nodes=" << result.total_nodes() << "\n";
  out << "total_millis=" << result.total_millis() << "\n";
  return out.str();
}

std::array<PhaseStats, 3> parse_phase_stats(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  std::array<PhaseStats, 3> phases;
  const char* names[3] = {"phase1", "phase2", "phase3"};
  for (int i = 0; i < 3; ++i) {
    auto nodes = kv.find(std::string(names[i]) + "_nodes");
    auto millis = kv.find(std::string(names[i]) + "_millis");
    if (nodes == kv.end() || millis == kv.end())
      throw std::invalid_argument("parse_phase_stats: missing phase fields");
    phases[i].nodes = std::stoull(nodes->second);
    phases[i].millis = std::stod(millis->second);
  }
  return phases;
}

}  // namespace symcan
