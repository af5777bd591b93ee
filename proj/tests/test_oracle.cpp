#include <doctest.h>

#include "tfpack/errors.hpp"
#include "tfpack/generators.hpp"
#include "tfpack/oracle.hpp"
#include "tfpack/rng.hpp"

using namespace tfpack;

TEST_CASE("oracle: C3-subdivisions of C6 collapse to the one cycle subgraph") {
  auto g = gen_named("C6");
  PatternGraph c3(gen_named("C3"));
  auto list = enumerate_subdivisions(g, c3);
  // Every branch triple traces the same subgraph (the hexagon itself); the
  // dedup by vertex+edge set keeps exactly one witness.
  CHECK(list.size() == 1);
  for (const auto& w : list) CHECK(validate_witness(g, c3, w).valid);
}

TEST_CASE("oracle: C3-subdivisions of K4 are its 7 cycles") {
  auto g = gen_named("K4");
  PatternGraph c3(gen_named("C3"));
  auto list = enumerate_subdivisions(g, c3);
  CHECK(list.size() == 7);  // 4 triangles + 3 four-cycles
}

TEST_CASE("oracle: K4 contains the identity K4 witness") {
  auto g = gen_named("K4");
  PatternGraph k4(gen_named("K4"));
  auto list = enumerate_subdivisions(g, k4);
  CHECK(list.size() == 1);
}

TEST_CASE("oracle: trees contain no cycle subdivisions") {
  auto g = gen_named("P7");
  PatternGraph c3(gen_named("C3"));
  CHECK(enumerate_subdivisions(g, c3).empty());
  CHECK(!exists_subdivision(g, c3));
}

TEST_CASE("oracle: limits are enforced up front") {
  auto g = gen_random_regular(16, 3, 1);
  PatternGraph c3(gen_named("C3"));
  OracleLimits limits;
  limits.max_n = 12;
  CHECK_THROWS_WITH_AS(enumerate_subdivisions(g, c3, limits), doctest::Contains("LimitsExceeded"),
                       Error);
}

TEST_CASE("oracle: optimal packing on tiny instances") {
  PatternGraph c3(gen_named("C3"));
  SUBCASE("two disjoint triangles cover everything") {
    auto g = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto res = optimal_packing(g, c3);
    CHECK(res.certified);
    CHECK(res.packing.coverage_fraction == 1.0);
  }
  SUBCASE("K4 is fully covered by one of its 4-cycles") {
    auto res = optimal_packing(gen_named("K4"), c3);
    CHECK(res.certified);
    CHECK(res.packing.covered.size() == 4);
  }
  SUBCASE("C7 is itself a subdivided triangle") {
    auto res = optimal_packing(gen_named("C7"), c3);
    CHECK(res.certified);
    CHECK(res.packing.coverage_fraction == 1.0);
  }
}

TEST_CASE("oracle: optimal coverage is monotone under edge addition") {
  Rng rng(555);
  PatternGraph c3(gen_named("C3"));
  auto g = build_graph(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  double before = optimal_packing(g, c3).packing.coverage_fraction;
  auto edges = g.edges();
  edges.emplace_back(4, 5);
  edges.emplace_back(3, 5);  // creates a second triangle
  auto g2 = build_graph(7, edges);
  double after = optimal_packing(g2, c3).packing.coverage_fraction;
  CHECK(after >= before);
}

TEST_CASE("oracle: connected graph counts on few vertices") {
  // 1, 1, 2, 6, 21, 112 connected graphs on 1..6 vertices
  CHECK(enumerate_connected_graphs(1).size() == 1);
  CHECK(enumerate_connected_graphs(2).size() == 1);
  CHECK(enumerate_connected_graphs(3).size() == 2);
  CHECK(enumerate_connected_graphs(4).size() == 6);
  CHECK(enumerate_connected_graphs(5).size() == 21);
  CHECK(enumerate_connected_graphs(6).size() == 112);
}
