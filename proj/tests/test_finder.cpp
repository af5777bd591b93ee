#include <doctest.h>

#include "tfpack/errors.hpp"
#include "tfpack/generators.hpp"
#include "tfpack/oracle.hpp"
#include "tfpack/rng.hpp"
#include "tfpack/subdivision_finder.hpp"

using namespace tfpack;

namespace {

FinderBudget exhaustive_budget() {
  FinderBudget b;
  b.strategy = FinderStrategy::exhaustive;
  b.node_budget = 20'000'000;
  return b;
}

}  // namespace

TEST_CASE("finder: K4 inside K5 (plain subgraph copy)") {
  auto g = gen_named("K5");
  PatternGraph k4(gen_named("K4"));
  auto res = find_subdivision(g, k4, exhaustive_budget());
  CHECK(res.status == FindStatus::found);
  CHECK(validate_witness(g, k4, res.witness).valid);
}

TEST_CASE("finder: Petersen graph contains a K4-subdivision") {
  auto g = gen_named("petersen");
  PatternGraph k4(gen_named("K4"));
  auto res = find_subdivision(g, k4, exhaustive_budget());
  CHECK(res.status == FindStatus::found);
  CHECK(validate_witness(g, k4, res.witness).valid);
}

TEST_CASE("finder: certified absence of K4 in a cycle") {
  auto g = gen_named("C7");
  PatternGraph k4(gen_named("K4"));
  auto res = find_subdivision(g, k4, exhaustive_budget());
  CHECK(res.status == FindStatus::absent);
}

TEST_CASE("finder: budget exhaustion reports unknown") {
  auto g = gen_named("petersen");
  PatternGraph k4(gen_named("K4"));
  FinderBudget tiny;
  tiny.strategy = FinderStrategy::exhaustive;
  tiny.node_budget = 3;
  auto res = find_subdivision(g, k4, tiny);
  CHECK(res.status == FindStatus::unknown);
}

TEST_CASE("finder: absence may be certified without budget when pruning empties the space") {
  // All degrees of C7 are below the K4 branch requirement.
  auto g = gen_named("C7");
  PatternGraph k4(gen_named("K4"));
  FinderBudget tiny;
  tiny.strategy = FinderStrategy::exhaustive;
  tiny.node_budget = 3;
  CHECK(find_subdivision(g, k4, tiny).status == FindStatus::absent);
}

TEST_CASE("finder: dense_greedy is sound and finds easy witnesses") {
  auto g = gen_random_regular(128, 16, 5);
  FinderBudget b;
  b.strategy = FinderStrategy::dense_greedy;
  for (const char* id : {"C3", "C4", "K4"}) {
    PatternGraph pattern(gen_named(id));
    auto res = find_subdivision(g, pattern, b);
    CHECK(res.status == FindStatus::found);
    CHECK(validate_witness(g, pattern, res.witness).valid);
  }
}

TEST_CASE("finder: dense_greedy never certifies absence") {
  auto g = gen_named("C7");
  PatternGraph k4(gen_named("K4"));
  FinderBudget b;
  b.strategy = FinderStrategy::dense_greedy;
  auto res = find_subdivision(g, k4, b);
  CHECK(res.status == FindStatus::unknown);
}

TEST_CASE("finder: monotone under edge addition") {
  // if a witness exists, adding edges never destroys it
  Rng rng(99);
  auto g = gen_named("petersen");
  PatternGraph c4(gen_named("C4"));
  REQUIRE(find_subdivision(g, c4, exhaustive_budget()).status == FindStatus::found);
  auto edges = g.edges();
  for (int added = 0; added < 5;) {
    Vertex u = static_cast<Vertex>(rng.uniform_index(10));
    Vertex v = static_cast<Vertex>(rng.uniform_index(10));
    if (u == v || g.has_edge(u, v)) continue;
    edges.emplace_back(u, v);
    g = build_graph(10, edges);
    ++added;
    auto res = find_subdivision(g, c4, exhaustive_budget());
    CHECK(res.status == FindStatus::found);
  }
}

TEST_CASE("finder agrees with the oracle on small graphs") {
  Rng rng(2024);
  PatternGraph c3(gen_named("C3"));
  PatternGraph k4(gen_named("K4"));
  for (int trial = 0; trial < 40; ++trial) {
    Vertex n = 4 + static_cast<Vertex>(rng.uniform_index(4));  // 4..7
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.uniform01() < 0.4) edges.emplace_back(u, v);
    auto g = build_graph(n, edges);
    for (const PatternGraph* pattern : {&c3, &k4}) {
      auto res = find_subdivision(g, *pattern, exhaustive_budget());
      bool oracle = exists_subdivision(g, *pattern);
      CHECK(res.status == (oracle ? FindStatus::found : FindStatus::absent));
    }
  }
}

TEST_CASE("complete bipartite construction") {
  SUBCASE("C3 via parts of size 9") {
    auto g = gen_named("K9,9");
    std::vector<Vertex> ax, ay;
    for (Vertex v = 0; v < 9; ++v) ax.push_back(v);
    for (Vertex v = 9; v < 18; ++v) ay.push_back(v);
    PatternGraph c3(gen_named("C3"));
    auto w = find_in_complete_bipartite(g, ax, ay, c3);
    CHECK(validate_witness(g, c3, w).valid);
    for (const auto& path : w.subdiv_paths) CHECK(path.size() == 3);
  }
  SUBCASE("K4 via parts of size 16") {
    auto g = gen_named("K16,16");
    std::vector<Vertex> ax, ay;
    for (Vertex v = 0; v < 16; ++v) ax.push_back(v);
    for (Vertex v = 16; v < 32; ++v) ay.push_back(v);
    PatternGraph k4(gen_named("K4"));
    auto w = find_in_complete_bipartite(g, ax, ay, k4);
    CHECK(validate_witness(g, k4, w).valid);
    CHECK(w.branch_map.size() == 4);
    CHECK(w.subdiv_paths.size() == 6);
  }
  SUBCASE("parts below |F|^2 are rejected") {
    auto g = gen_named("K8,8");
    std::vector<Vertex> ax, ay;
    for (Vertex v = 0; v < 8; ++v) ax.push_back(v);
    for (Vertex v = 8; v < 16; ++v) ay.push_back(v);
    PatternGraph c3(gen_named("C3"));
    CHECK_THROWS_WITH_AS(find_in_complete_bipartite(g, ax, ay, c3),
                         doctest::Contains("PartsTooSmall"), Error);
  }
}

TEST_CASE("mader threshold check") {
  CHECK(mader_threshold_check(gen_named("K5"), 4.0));
  CHECK(!mader_threshold_check(build_graph(10, {}), 0.1));
  CHECK(mader_threshold_check(gen_named("C7"), 2.0));  // boundary inclusive
  CHECK(!mader_threshold_check(gen_named("C7"), 2.0001));
}
