// symcan command-line front end: parse a graph, run the selected search
// mode, and emit generators, canonical form, group order, and statistics.
//
// Results that identify the graph (canonical DIMACS bytes, bench rows) go to
// stdout; everything else is key=value lines on stderr. Output is
// byte-identical across runs; wall-clock values appear only under --stats.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symcan/canonical_search.hpp"
#include "symcan/io.hpp"
#include "symcan/pipeline.hpp"
#include "symcan/symmetry_search.hpp"

namespace {

constexpr int kExitParseError = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitUnreadable = 3;

using Clock = std::chrono::steady_clock;

struct RunConfig {
  std::string input;
  std::string format = "dimacs";
  std::string mode = "combined";
  std::string selector = "first";
  std::string early_sym = "on";
  bool stats = false;
  std::uint64_t seed = 0;
  bool has_seed = false;
  double timeout_seconds = 1000.0;
  std::vector<int> bench_sizes;
};

symcan::Graph load_graph(const RunConfig& config) {
  std::string text;
  if (config.input == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(config.input);
    if (!file) {
      std::cerr << "error: cannot read input '" << config.input << "'\n";
      std::exit(kExitUnreadable);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  return config.format == "cnf" ? symcan::parse_cnf(text) : symcan::parse_dimacs(text);
}

symcan::SearchLimits make_limits(const RunConfig& config) {
  symcan::SearchLimits limits;
  limits.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(config.timeout_seconds));
  return limits;
}

symcan::CellSelector selector_of(const RunConfig& config) {
  return config.selector == "maxnonuniform" ? symcan::CellSelector::MaxNonUniformlyJoined
                                            : symcan::CellSelector::FirstNonSingleton;
}

void print_generators(const std::vector<symcan::Permutation>& gens) {
  std::cerr << "gens=" << gens.size() << "\n";
  for (const auto& g : gens) std::cerr << "gen=" << g.cycle_string() << "\n";
}

void run_auto(const symcan::Graph& g, const RunConfig& config) {
  auto start = Clock::now();
  symcan::SymmetrySearchOptions options;
  options.limits = make_limits(config);
  symcan::SymmetryReport report = symcan::search_automorphisms(g, options);
  print_generators(report.generators);
  std::cerr << "grpsize=" << report.group_order.to_string() << "\n";
  std::cerr << "orbits=" << report.orbits().to_string() << "\n";
  std::cerr << "nodes=" << report.nodes_explored << "\n";
  std::cerr << "bads=" << report.bad_nodes << "\n";
  std::cerr << "levels=" << report.stabilizer_sequence.size() << "\n";
  if (config.stats) {
    std::cerr << "millis="
              << std::chrono::duration<double, std::milli>(Clock::now() - start).count() << "\n";
  }
}

void print_canonical(const symcan::Graph& g, const symcan::CanonicalResult& result) {
  std::string form = symcan::to_dimacs(result.canonical_form);
  std::cout << form;
  std::cerr << "labeling=" << result.canonical_labeling.cycle_string() << "\n";
  std::cerr << "digest=" << symcan::graph_digest(result.canonical_form) << "\n";
  print_generators(result.generators);
  std::cerr << "grpsize=" << result.group_order.to_string() << "\n";
  std::cerr << "nodes=" << result.nodes_explored << "\n";
  std::cerr << "leaves=" << result.leaves_visited << "\n";
  (void)g;
}

void run_canon(const symcan::Graph& g, const RunConfig& config) {
  auto start = Clock::now();
  symcan::CanonicalOptions options;
  options.selector = selector_of(config);
  options.early_symmetry = config.early_sym == "on";
  options.limits = make_limits(config);
  symcan::CanonicalResult result = symcan::search_canonical(g, options);
  print_canonical(g, result);
  if (config.stats) {
    std::cerr << "millis="
              << std::chrono::duration<double, std::milli>(Clock::now() - start).count() << "\n";
  }
}

void run_combined(const symcan::Graph& g, const RunConfig& config) {
  symcan::PipelineOptions options;
  options.selector = selector_of(config);
  options.limits = make_limits(config);
  symcan::PipelineResult result = symcan::canonical_label_combined(g, options);
  print_canonical(g, result.canonical);
  const char* names[3] = {"phase1", "phase2", "phase3"};
  for (int i = 0; i < 3; ++i)
    std::cerr << names[i] << "_nodes=" << result.phases[i].nodes << "\n";
  std::cerr << "total_nodes=" << result.total_nodes() << "\n";
  if (config.stats) std::cerr << symcan::phase_stats(result);
}

int run_bench(const RunConfig& config) {
  for (int n : config.bench_sizes) {
    if (n < 2 || n % 2 != 0) {
      std::cerr << "error: bench sizes must be even and >= 2\n";
      return kExitParseError;
    }
  }
  for (int n : config.bench_sizes) {
    symcan::Graph g = symcan::matching_graph(n / 2);
    for (const char* mode_name : {"auto", "canon", "combined"}) {
      std::string mode = mode_name;
      auto start = Clock::now();
      std::uint64_t nodes = 0;
      bool timed_out = false;
      try {
        if (mode == "auto") {
          symcan::SymmetrySearchOptions options;
          options.limits = make_limits(config);
          nodes = symcan::search_automorphisms(g, options).nodes_explored;
        } else if (mode == "canon") {
          symcan::CanonicalOptions options;
          options.selector = selector_of(config);
          options.early_symmetry = config.early_sym == "on";
          options.limits = make_limits(config);
          nodes = symcan::search_canonical(g, options).nodes_explored;
        } else {
          symcan::PipelineOptions options;
          options.selector = selector_of(config);
          options.limits = make_limits(config);
          nodes = symcan::canonical_label_combined(g, options).total_nodes();
        }
      } catch (const symcan::TimeoutError&) {
        timed_out = true;
      }
      double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      std::cout << "n=" << n << " mode=" << mode << " nodes=" << nodes << " millis=" << ms
                << " status=" << (timed_out ? "timeout" : "ok") << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"Graph automorphism detection and canonical labeling engine"};

  app.add_option("input", config.input, "Input file path, or '-' for stdin");
  app.add_option("--format", config.format, "Input format")
      ->check(CLI::IsMember({"dimacs", "cnf"}))
      ->capture_default_str();
  app.add_option("--mode", config.mode, "auto: symmetries only; canon: single-pass canonical labeling; combined: two-phase pipeline")
      ->check(CLI::IsMember({"auto", "canon", "combined"}))
      ->capture_default_str();
  app.add_option("--selector", config.selector, "Branching cell selector")
      ->check(CLI::IsMember({"first", "maxnonuniform"}))
      ->capture_default_str();
  app.add_option("--early-sym", config.early_sym, "Left-path early symmetry detection (canon mode)")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  app.add_flag("--stats", config.stats, "Emit timing statistics on stderr");
  auto* seed_opt =
      app.add_option("--seed", config.seed, "Relabel the input by a seeded random permutation");
  app.add_option("--timeout", config.timeout_seconds, "Time limit in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--bench-sizes", config.bench_sizes,
                 "Run the matching-graph sweep over these vertex counts (all modes)")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  config.has_seed = seed_opt->count() > 0;

  try {
    if (!config.bench_sizes.empty()) return run_bench(config);

    if (config.input.empty()) {
      std::cerr << "error: missing input (path or '-')\n";
      return kExitParseError;
    }
    symcan::Graph g = load_graph(config);
    if (config.has_seed) g = symcan::random_relabel(g, config.seed).first;

    if (config.mode == "auto")
      run_auto(g, config);
    else if (config.mode == "canon")
      run_canon(g, config);
    else
      run_combined(g, config);
    return 0;
  } catch (const symcan::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const symcan::TimeoutError&) {
    std::cerr << "error: timed out after " << config.timeout_seconds << " seconds\n";
    return kExitTimeout;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
}
