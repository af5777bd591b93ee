#include <doctest.h>

#include <sstream>

#include "tfpack/errors.hpp"
#include "tfpack/experiment.hpp"
#include "tfpack/generators.hpp"
#include "tfpack/serialize.hpp"

using namespace tfpack;

TEST_CASE("edge list round trip") {
  auto g = gen_random_regular(32, 4, 9);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  auto g2 = read_edge_list(in);
  CHECK(g.vertex_count() == g2.vertex_count());
  CHECK(g.edges() == g2.edges());
}

TEST_CASE("edge list errors carry the origin") {
  std::istringstream bad("3 2\n0 1\n");
  CHECK_THROWS_WITH_AS(read_edge_list(bad, "three.el"), doctest::Contains("three.el"), Error);
  std::istringstream loop("2 1\n1 1\n");
  CHECK_THROWS_AS(read_edge_list(loop, "loop.el"), Error);
}

TEST_CASE("packing JSON round trip revalidates") {
  auto g = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  PatternGraph c3(gen_named("C3"));
  Packing p;
  SubdivisionWitness w;
  w.branch_map = {0, 1, 2};
  w.subdiv_paths = {{0, 1}, {0, 2}, {1, 2}};
  p.witnesses.push_back(w);
  p.recompute_coverage(6);

  auto text = packing_to_json(g, c3, p);
  auto loaded = packing_from_json(text);
  CHECK(loaded.host_n == 6);
  CHECK(validate_packing(g, loaded.pattern, loaded.packing).valid);
  CHECK(loaded.packing.witnesses.size() == 1);

  // serialization is deterministic
  CHECK(text == packing_to_json(g, c3, p));
}

TEST_CASE("malformed packing JSON is an IoError") {
  CHECK_THROWS_WITH_AS(packing_from_json("{"), doctest::Contains("IoError"), Error);
  CHECK_THROWS_AS(packing_from_json(R"({"format":"x"})"), Error);
}

TEST_CASE("experiment spec parsing") {
  const char* text = R"({
    "instances": [{"kind": "random_regular", "n": 64, "d": 8, "seed": 3}],
    "pattern": "C3",
    "grid": {"p": [0.2], "m": [4], "epsilon": [0.3], "gamma": [0.5]},
    "repetitions": 2,
    "seed_base": 99
  })";
  auto spec = experiment_spec_from_json(text);
  CHECK(spec.instances.size() == 1);
  CHECK(spec.repetitions == 2);
  CHECK(spec.m_values == std::vector<int>{4});
  CHECK_THROWS_AS(experiment_spec_from_json("{}"), Error);
}

TEST_CASE("run_experiment: deterministic rows, round-trip validated") {
  ExperimentSpec spec;
  GenSpec gs;
  gs.kind = "random_regular";
  gs.n = 200;
  gs.d = 32;
  gs.seed = 5;
  spec.instances = {gs};
  spec.pattern_id = "C3";
  spec.p_values = {0.2};
  spec.m_values = {4};
  spec.epsilon_values = {0.3};
  spec.gamma_values = {0.5};
  spec.u_prime_values = {1.0};
  spec.repetitions = 3;
  spec.seed_base = 12;
  spec.threads = 2;

  auto rows1 = run_experiment(spec);
  auto rows2 = run_experiment(spec);
  REQUIRE(rows1.size() == 3);
  for (size_t i = 0; i < rows1.size(); ++i) {
    CHECK(rows1[i].coverage == rows2[i].coverage);
    CHECK(rows1[i].packing_json == rows2[i].packing_json);
    CHECK(rows1[i].all_invariants_ok);
  }

  auto csv1 = outcomes_to_csv(rows1);
  auto csv2 = outcomes_to_csv(rows2);
  // identical except possibly the wall_ms column
  auto strip_wall = [](std::string s) {
    std::string out;
    std::istringstream lines(s);
    std::string line;
    while (std::getline(lines, line)) {
      auto last_comma = line.rfind(',');
      auto second_last = line.rfind(',', last_comma - 1);
      out += line.substr(0, second_last) + line.substr(last_comma);
      out += '\n';
    }
    return out;
  };
  CHECK(strip_wall(csv1) == strip_wall(csv2));
}

TEST_CASE("calibrate: a degenerate one-cell grid returns that cell") {
  ExperimentSpec spec;
  GenSpec gs;
  gs.kind = "random_regular";
  gs.n = 150;
  gs.d = 24;
  gs.seed = 4;
  spec.instances = {gs};
  spec.pattern_id = "C3";
  spec.p_values = {0.25};
  spec.m_values = {3};
  spec.epsilon_values = {0.3};
  spec.gamma_values = {0.5};
  spec.u_prime_values = {1.0};
  spec.repetitions = 2;
  spec.seed_base = 77;
  spec.threads = 1;
  auto rep = calibrate(spec);
  CHECK(rep.best_cell == 0);
  CHECK(rep.recommended.m == 3);
}
