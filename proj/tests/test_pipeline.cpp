#include <doctest.h>

#include "symcan/pipeline.hpp"
#include "test_util.hpp"

using namespace symcan;

TEST_SUITE("pipeline") {

TEST_CASE("combined equals single pass on the fixture") {
  Graph g = square_triangle_graph();
  PipelineResult combined = canonical_label_combined(g);
  CanonicalOptions plain;
  plain.early_symmetry = false;
  CanonicalResult single = search_canonical(g, plain);
  CHECK(combined.canonical.canonical_form == single.canonical_form);
  CHECK(combined.canonical.group_order == 48);
  CHECK(combined.symmetry.group_order == 48);
}

TEST_CASE("combined equals single pass on random graphs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = test::random_graph(14, 0.25, seed);
    PipelineResult combined = canonical_label_combined(g);
    CanonicalResult single = search_canonical(g);
    CHECK(combined.canonical.canonical_form == single.canonical_form);
    CHECK(combined.canonical.group_order == single.group_order);
  }
}

TEST_CASE("matching graphs: decomposition branches collapse to one orbit") {
  PipelineResult result = canonical_label_combined(matching_graph(50));
  // every decomposition-level sibling is orbit-pruned
  CHECK(result.phases[2].nodes == 0);
  // phase 1 is the left path: k+1 nodes
  CHECK(result.phases[0].nodes == 51);
  BigUint expected(1);
  expected.mul_pow2(50);
  expected.mul_factorial(50);
  CHECK(result.canonical.group_order == expected);
}

TEST_CASE("combined node total beats plain canonical labeling on matchings") {
  Graph g = matching_graph(50);
  PipelineResult combined = canonical_label_combined(g);
  CanonicalOptions plain;
  plain.early_symmetry = false;
  CanonicalResult single = search_canonical(g, plain);
  CHECK(combined.total_nodes() < single.nodes_explored);
  CHECK(combined.canonical.canonical_form == single.canonical_form);
}

TEST_CASE("trivial group pays only the symmetry-pass overhead") {
  Graph g = test::asymmetric_graph();
  PipelineResult result = canonical_label_combined(g);
  CanonicalResult single = search_canonical(g);
  CHECK(result.canonical.canonical_form == single.canonical_form);
  CHECK(result.symmetry.group_order == 1);
  CHECK(result.phases[2].nodes == single.nodes_explored - result.phases[0].nodes);
}

TEST_CASE("phase accounting adds up") {
  PipelineResult result = canonical_label_combined(square_triangle_graph());
  CHECK(result.total_nodes() ==
        result.phases[0].nodes + result.phases[1].nodes + result.phases[2].nodes);
  CHECK(result.phases[1].nodes == result.symmetry.nodes_explored);
}

TEST_CASE("phase stats round-trip") {
  PipelineResult result = canonical_label_combined(matching_graph(8));
  auto parsed = parse_phase_stats(phase_stats(result));
  CHECK(parsed == result.phases);
}

TEST_CASE("combined generators all verify") {
  Graph g = test::random_graph(18, 0.15, 5);
  PipelineResult result = canonical_label_combined(g);
  for (const auto& gamma : result.canonical.generators) CHECK(is_automorphism(g, gamma));
}

}  // TEST_SUITE
