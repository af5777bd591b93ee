#include <doctest.h>

#include <algorithm>

#include "tfpack/errors.hpp"
#include "tfpack/generators.hpp"
#include "tfpack/rng.hpp"
#include "tfpack/witness.hpp"

using namespace tfpack;

TEST_CASE("build_graph canonicalizes a triangle") {
  auto g = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  for (Vertex v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
  CHECK(g.has_edge(0, 2));
  CHECK(!g.has_edge(0, 0));
}

TEST_CASE("build_graph rejects self-loops and duplicates") {
  CHECK_THROWS_WITH_AS(build_graph(2, {{0, 0}}), doctest::Contains("SelfLoop"), Error);
  CHECK_THROWS_WITH_AS(build_graph(4, {{0, 1}, {0, 1}}), doctest::Contains("DuplicateEdge"), Error);
  CHECK_THROWS_WITH_AS(build_graph(4, {{1, 0}, {0, 1}}), doctest::Contains("DuplicateEdge"), Error);
  CHECK_THROWS_AS(build_graph(2, {{0, 5}}), Error);
}

TEST_CASE("build_graph is order-invariant") {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  auto g1 = build_graph(4, edges);
  Rng rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    rng.shuffle(edges);
    for (auto& [u, v] : edges)
      if (rng.next() & 1) std::swap(u, v);
    auto g2 = build_graph(4, edges);
    CHECK(g1.edges() == g2.edges());
  }
}

TEST_CASE("witness: a graph is a subdivision of itself") {
  auto c3 = gen_named("C3");
  PatternGraph pattern(c3);
  SubdivisionWitness w;
  w.branch_map = {0, 1, 2};
  for (auto [u, v] : pattern.core().edges()) w.subdiv_paths.push_back({u, v});
  CHECK(validate_witness(c3, pattern, w).valid);
}

TEST_CASE("witness: C6 as a once-subdivided triangle") {
  auto c6 = gen_named("C6");
  PatternGraph pattern(gen_named("C3"));
  SubdivisionWitness w;
  w.branch_map = {0, 2, 4};
  // core edges of C3 are (0,1),(0,2),(1,2) -> paths 0..2, 0..4, 2..4
  w.subdiv_paths = {{0, 1, 2}, {0, 5, 4}, {2, 3, 4}};
  auto rep = validate_witness(c6, pattern, w);
  CHECK(rep.valid);
}

TEST_CASE("witness: shared internal vertex is rejected") {
  auto c6 = gen_named("C6");
  // add a chord so two paths could share vertex 1
  auto g = build_graph(6, [&] {
    auto e = c6.edges();
    e.push_back({1, 4});
    return e;
  }());
  PatternGraph pattern(gen_named("C3"));
  SubdivisionWitness w;
  w.branch_map = {0, 2, 4};
  w.subdiv_paths = {{0, 1, 2}, {0, 1, 4}, {2, 3, 4}};
  auto rep = validate_witness(g, pattern, w);
  CHECK(!rep.valid);
  CHECK(std::count(rep.reasons.begin(), rep.reasons.end(), WitnessReason::internal_overlap) > 0);
}

TEST_CASE("witness: wrong endpoints and broken paths are rejected") {
  auto c6 = gen_named("C6");
  PatternGraph pattern(gen_named("C3"));
  SubdivisionWitness w;
  w.branch_map = {0, 2, 4};
  w.subdiv_paths = {{0, 1, 2}, {0, 5, 4}, {2, 5, 4}};  // 2-5 is not an edge
  auto rep = validate_witness(c6, pattern, w);
  CHECK(!rep.valid);
  CHECK(std::count(rep.reasons.begin(), rep.reasons.end(), WitnessReason::path_not_in_graph) > 0);
}

TEST_CASE("witness: isolated-vertex stand-ins") {
  auto g = gen_named("C6");
  PatternGraph pattern(gen_named("K2+v"));  // one edge plus one isolated vertex
  SubdivisionWitness w;
  w.branch_map = {0, 1};
  w.subdiv_paths = {{0, 1}};
  SUBCASE("accepted when distinct") {
    w.iso_vertices = {3};
    CHECK(validate_witness(g, pattern, w).valid);
  }
  SUBCASE("wrong count") {
    auto rep = validate_witness(g, pattern, w);
    CHECK(!rep.valid);
  }
  SUBCASE("overlap with a branch vertex") {
    w.iso_vertices = {0};
    auto rep = validate_witness(g, pattern, w);
    CHECK(!rep.valid);
    CHECK(std::count(rep.reasons.begin(), rep.reasons.end(), WitnessReason::iso_overlap) > 0);
  }
}

TEST_CASE("contracting subdivision paths recovers the core pattern") {
  // Direct edge-set comparison under the branch map, no isomorphism search.
  auto c6 = gen_named("C6");
  PatternGraph pattern(gen_named("C3"));
  SubdivisionWitness w;
  w.branch_map = {0, 2, 4};
  w.subdiv_paths = {{0, 1, 2}, {0, 5, 4}, {2, 3, 4}};
  REQUIRE(validate_witness(c6, pattern, w).valid);
  std::vector<Edge> contracted;
  for (size_t i = 0; i < w.subdiv_paths.size(); ++i) {
    auto [cu, cv] = pattern.core().edges()[i];
    CHECK(w.subdiv_paths[i].front() == w.branch_map[static_cast<size_t>(cu)]);
    CHECK(w.subdiv_paths[i].back() == w.branch_map[static_cast<size_t>(cv)]);
    contracted.emplace_back(cu, cv);
  }
  CHECK(contracted == pattern.core().edges());
}

TEST_CASE("validate_packing: empty, disjoint and overlapping") {
  // two disjoint triangles
  auto g = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  PatternGraph pattern(gen_named("C3"));

  Packing empty;
  auto rep0 = validate_packing(g, pattern, empty);
  CHECK(rep0.valid);
  CHECK(rep0.coverage == 0.0);

  auto triangle = [&](Vertex a, Vertex b, Vertex c) {
    SubdivisionWitness w;
    w.branch_map = {a, b, c};
    w.subdiv_paths = {{a, b}, {a, c}, {b, c}};
    return w;
  };
  Packing two;
  two.witnesses = {triangle(0, 1, 2), triangle(3, 4, 5)};
  auto rep2 = validate_packing(g, pattern, two);
  CHECK(rep2.valid);
  CHECK(rep2.coverage == 1.0);

  Packing overlap;
  overlap.witnesses = {triangle(0, 1, 2), triangle(0, 1, 2)};
  auto rep3 = validate_packing(g, pattern, overlap);
  CHECK(!rep3.valid);
  bool has_overlap = false;
  for (auto [reason, idx] : rep3.reasons) has_overlap |= reason == PackingReason::witness_overlap;
  CHECK(has_overlap);
}
