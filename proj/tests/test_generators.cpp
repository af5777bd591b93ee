#include <doctest.h>

#include <set>

#include "tfpack/errors.hpp"
#include "tfpack/generators.hpp"

using namespace tfpack;

namespace {

bool is_regular(const HostGraph& g, int d) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

}  // namespace

TEST_CASE("random regular: K4 is the unique 3-regular graph on 4 vertices") {
  for (uint64_t seed : {1u, 2u, 3u}) {
    auto g = gen_random_regular(4, 3, seed);
    CHECK(g.edge_count() == 6);
    CHECK(is_regular(g, 3));
  }
}

TEST_CASE("random regular: 2-regular is a disjoint union of cycles") {
  auto g = gen_random_regular(6, 2, 99);
  CHECK(is_regular(g, 2));
  CHECK(g.edge_count() == 6);
}

TEST_CASE("random regular: n=1000 d=16 seed 42") {
  auto g = gen_random_regular(1000, 16, 42);
  CHECK(is_regular(g, 16));
  // Regression: this instance comes out connected (recorded at first run).
  CHECK(g.is_connected());
}

TEST_CASE("random regular: infeasible degree sequences") {
  CHECK_THROWS_WITH_AS(gen_random_regular(5, 3, 1), doctest::Contains("InfeasibleDegreeSequence"),
                       Error);
  CHECK_THROWS_AS(gen_random_regular(4, 4, 1), Error);
}

TEST_CASE("random regular: deterministic in the seed") {
  auto a = gen_random_regular(64, 8, 1234);
  auto b = gen_random_regular(64, 8, 1234);
  auto c = gen_random_regular(64, 8, 1235);
  CHECK(a.edges() == b.edges());
  CHECK(a.edges() != c.edges());
}

TEST_CASE("random regular: larger d goes through the repair path") {
  auto g = gen_random_regular(200, 32, 7);
  CHECK(is_regular(g, 32));
}

TEST_CASE("gadget: d=4 gives 26 vertices, 4-regular") {
  auto res = gen_lower_bound_gadget(4);
  CHECK(res.graph.vertex_count() == 26);
  CHECK(is_regular(res.graph, 4));
}

TEST_CASE("gadget: d=6 gives 50 vertices, 6-regular") {
  auto res = gen_lower_bound_gadget(6);
  CHECK(res.graph.vertex_count() == 50);
  CHECK(is_regular(res.graph, 6));
}

TEST_CASE("gadget: odd or small d rejected") {
  CHECK_THROWS_WITH_AS(gen_lower_bound_gadget(3), doctest::Contains("InvalidDegree"), Error);
  CHECK_THROWS_AS(gen_lower_bound_gadget(2), Error);
}

TEST_CASE("gadget: marked vertices and block structure") {
  const int d = 4;
  auto res = gen_lower_bound_gadget(d);
  const auto& g = res.graph;
  CHECK(!g.has_edge(res.u, res.v));
  CHECK(g.degree(res.u) == d);
  CHECK(g.degree(res.v) == d);
  // u and v share exactly the y_i neighborhood
  std::set<Vertex> nu(g.neighbors(res.u).begin(), g.neighbors(res.u).end());
  std::set<Vertex> nv(g.neighbors(res.v).begin(), g.neighbors(res.v).end());
  CHECK(nu == nv);
  CHECK(nu.size() == static_cast<size_t>(d));
  // removing u and v leaves d components of d+2 vertices each
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (v != res.u && v != res.v) keep.push_back(v);
  auto [sub, back] = induced_subgraph(g, keep);
  std::vector<int> comp(static_cast<size_t>(sub.vertex_count()), -1);
  int ncomp = 0;
  for (Vertex s = 0; s < sub.vertex_count(); ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[static_cast<size_t>(s)] = ncomp;
    int size = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : sub.neighbors(x))
        if (comp[static_cast<size_t>(y)] < 0) {
          comp[static_cast<size_t>(y)] = ncomp;
          ++size;
          stack.push_back(y);
        }
    }
    CHECK(size == d + 2);
    ++ncomp;
  }
  CHECK(ncomp == d);
}

TEST_CASE("gadget: literal Hamilton-cycle reading is not regular") {
  auto res = gen_lower_bound_gadget(4, GadgetBlockMode::hamilton_cycle);
  CHECK(res.graph.vertex_count() == 26);
  CHECK(!is_regular(res.graph, 4));
}

TEST_CASE("named catalog") {
  auto k5 = gen_named("K5");
  CHECK(k5.vertex_count() == 5);
  CHECK(k5.edge_count() == 10);

  auto k33 = gen_named("K33");
  CHECK(k33.vertex_count() == 6);
  CHECK(k33.edge_count() == 9);

  auto pet = gen_named("petersen");
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.edge_count() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
  // girth 5: no triangles or 4-cycles
  for (auto [u, v] : pet.edges())
    for (Vertex w : pet.neighbors(v))
      if (w != u) {
        CHECK(!pet.has_edge(u, w));  // no triangle through u-v-w
        for (Vertex x : pet.neighbors(w))
          if (x != v && x != u) CHECK(!pet.has_edge(u, x));  // no 4-cycle
      }

  auto k4e = gen_named("K4-e");
  CHECK(k4e.vertex_count() == 4);
  CHECK(k4e.edge_count() == 5);

  auto k4v = gen_named("K4+v");
  CHECK(k4v.vertex_count() == 5);
  CHECK(k4v.edge_count() == 6);
  CHECK(k4v.degree(4) == 0);

  CHECK(gen_named("P4").edge_count() == 3);
  CHECK(gen_named("C7").edge_count() == 7);
  CHECK(gen_named("K3,3").edge_count() == 9);

  CHECK_THROWS_WITH_AS(gen_named("frobnitz"), doctest::Contains("UnknownName"), Error);
}
