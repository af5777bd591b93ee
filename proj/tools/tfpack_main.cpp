#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tfpack/errors.hpp"
#include "tfpack/experiment.hpp"
#include "tfpack/generators.hpp"
#include "tfpack/oracle.hpp"
#include "tfpack/packer.hpp"
#include "tfpack/serialize.hpp"

using namespace tfpack;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitConfig = 2;

struct GraphInput {
  std::string file;
  std::string gen_kind;
  Vertex n = 0;
  int d = 0;
  uint64_t seed = 0;
  std::string name;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph", file, "edge-list file to load");
    cmd->add_option("--gen", gen_kind, "generate instead: random_regular | gadget | named");
    cmd->add_option("--n", n, "vertex count for --gen random_regular");
    cmd->add_option("--d", d, "degree for --gen random_regular/gadget");
    cmd->add_option("--gen-seed", seed, "generator seed");
    cmd->add_option("--name", name, "graph id for --gen named");
  }

  HostGraph realize() const {
    if (!file.empty() && !gen_kind.empty())
      throw Error(Errc::config_error, "--graph and --gen are mutually exclusive");
    if (!file.empty()) return read_edge_list_file(file);
    if (gen_kind.empty()) throw Error(Errc::config_error, "need --graph or --gen");
    GenSpec gs;
    gs.kind = gen_kind;
    gs.n = n;
    gs.d = d;
    gs.seed = seed;
    gs.named_id = name;
    return realize_instance(gs);
  }
};

PatternGraph load_pattern(const std::string& id, const std::string& file) {
  if (!file.empty()) return PatternGraph(read_edge_list_file(file));
  return PatternGraph(gen_named(id));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot open " + path + " for writing");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertex-disjoint subdivision packing in near-regular graphs"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph and write it as an edge list");
  std::string gen_kind = "random_regular", gen_name, gen_out;
  Vertex gen_n = 0;
  int gen_d = 0;
  uint64_t gen_seed = 0;
  bool gadget_hamilton = false;
  gen_cmd->add_option("--kind", gen_kind, "random_regular | gadget | named")->required();
  gen_cmd->add_option("--n", gen_n, "vertex count (random_regular)");
  gen_cmd->add_option("--d", gen_d, "degree (random_regular, gadget)");
  gen_cmd->add_option("--seed", gen_seed, "seed (random_regular)");
  gen_cmd->add_option("--name", gen_name, "catalog id (named)");
  gen_cmd->add_option("--out", gen_out, "output file (default stdout)");
  gen_cmd->add_flag("--gadget-hamilton", gadget_hamilton,
                    "use the literal Hamilton-cycle block (not regular)");

  // ---- pack ----
  auto* pack_cmd = app.add_subcommand("pack", "pack subdivisions of a pattern into a graph");
  GraphInput pack_in;
  pack_in.attach(pack_cmd);
  std::string pack_pattern = "C3", pack_pattern_file, pack_out, pack_stats;
  PackerConfig pack_cfg;
  pack_cmd->add_option("--pattern", pack_pattern, "pattern id (K4, C3, C4, K4-e, K4+v, ...)");
  pack_cmd->add_option("--pattern-file", pack_pattern_file, "custom pattern edge list");
  pack_cmd->add_option("--eta", pack_cfg.eta, "coverage slack target");
  pack_cmd->add_option("--p", pack_cfg.p, "W fraction");
  pack_cmd->add_option("--m", pack_cfg.m, "path vertex count");
  pack_cmd->add_option("--epsilon", pack_cfg.epsilon, "cover slack");
  pack_cmd->add_option("--gamma", pack_cfg.gamma, "partition tolerance");
  pack_cmd->add_option("--u-prime", pack_cfg.u_prime_fraction,
                       "U' sampling fraction (0 = epsilon/2p)");
  pack_cmd->add_option("--seed", pack_cfg.seed, "packer seed");
  pack_cmd->add_option("--budget", pack_cfg.finder.node_budget, "finder node budget");
  pack_cmd->add_option("--out", pack_out, "packing JSON output file");
  pack_cmd->add_option("--stats", pack_stats, "one-row CSV with run statistics");

  // ---- find-subdiv ----
  auto* find_cmd = app.add_subcommand("find-subdiv", "search for one pattern subdivision");
  GraphInput find_in;
  find_in.attach(find_cmd);
  std::string find_pattern = "C3", find_pattern_file, find_strategy = "auto";
  int64_t find_budget = 1'000'000;
  find_cmd->add_option("--pattern", find_pattern, "pattern id");
  find_cmd->add_option("--pattern-file", find_pattern_file, "custom pattern edge list");
  find_cmd->add_option("--strategy", find_strategy, "exhaustive | dense_greedy | auto");
  find_cmd->add_option("--budget", find_budget, "node budget");

  // ---- oracle ----
  auto* oracle_cmd = app.add_subcommand("oracle", "ground truth on tiny graphs");
  GraphInput oracle_in;
  oracle_in.attach(oracle_cmd);
  std::string oracle_pattern = "C3", oracle_op = "enumerate";
  oracle_cmd->add_option("--pattern", oracle_pattern, "pattern id");
  oracle_cmd->add_option("--op", oracle_op, "enumerate | exists | pack");

  // ---- experiment ----
  auto* exp_cmd = app.add_subcommand("experiment", "run a seeded experiment grid");
  std::string exp_config, exp_out;
  exp_cmd->add_option("--config", exp_config, "experiment spec JSON")->required();
  exp_cmd->add_option("--out", exp_out, "CSV output file (default stdout)");

  // ---- calibrate ----
  auto* cal_cmd = app.add_subcommand("calibrate", "grid search for a recommended config");
  std::string cal_config, cal_out;
  cal_cmd->add_option("--config", cal_config, "experiment spec JSON")->required();
  cal_cmd->add_option("--out", cal_out, "report JSON output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) {
      HostGraph g;
      if (gen_kind == "gadget") {
        auto res = gen_lower_bound_gadget(
            gen_d, gadget_hamilton ? GadgetBlockMode::hamilton_cycle
                                   : GadgetBlockMode::perfect_matching);
        g = std::move(res.graph);
        std::cerr << "marked vertices: u=" << res.u << " v=" << res.v << "\n";
      } else {
        GenSpec gs;
        gs.kind = gen_kind;
        gs.n = gen_n;
        gs.d = gen_d;
        gs.seed = gen_seed;
        gs.named_id = gen_name;
        g = realize_instance(gs);
      }
      if (gen_out.empty())
        write_edge_list(std::cout, g);
      else
        write_edge_list_file(gen_out, g);
      return kExitOk;
    }

    if (*pack_cmd) {
      auto g = pack_in.realize();
      auto pattern = load_pattern(pack_pattern, pack_pattern_file);
      auto res = pack_full(g, pattern, pack_cfg);
      auto rep = validate_packing(g, pattern, res.packing);
      std::string json = packing_to_json(g, pattern, res.packing);
      if (!pack_out.empty()) write_file(pack_out, json);
      if (!pack_stats.empty()) {
        std::ostringstream csv;
        csv << "coverage,witnesses,kept,dropped,rounds,j_final,aux_density,degraded\n"
            << res.packing.coverage_fraction << ',' << res.packing.witnesses.size() << ','
            << res.kept << ',' << res.dropped << ',' << res.core.stats.rounds << ','
            << res.core.stats.j_final << ',' << res.core.stats.aux_density_mean << ','
            << (res.core.stats.split_degraded || res.core.stats.cover_degraded ? 1 : 0) << '\n';
        write_file(pack_stats, csv.str());
      }
      std::cout << "coverage " << res.packing.coverage_fraction << " (" << res.packing.witnesses.size()
                << " witnesses, valid=" << (rep.valid ? "yes" : "no") << ")\n";
      return rep.valid ? kExitOk : kExitInvariant;
    }

    if (*find_cmd) {
      auto g = find_in.realize();
      auto pattern = load_pattern(find_pattern, find_pattern_file);
      FinderBudget budget;
      budget.node_budget = find_budget;
      if (find_strategy == "exhaustive") budget.strategy = FinderStrategy::exhaustive;
      else if (find_strategy == "dense_greedy") budget.strategy = FinderStrategy::dense_greedy;
      else if (find_strategy == "auto") budget.strategy = FinderStrategy::auto_pick;
      else throw Error(Errc::config_error, "--strategy " + find_strategy);
      auto res = find_subdivision(g, pattern, budget);
      if (res.status == FindStatus::found)
        std::cout << witness_to_json(pattern, res.witness);
      else if (res.status == FindStatus::absent)
        std::cout << "NOT_FOUND\n";
      else
        std::cout << "UNKNOWN\n";
      return kExitOk;
    }

    if (*oracle_cmd) {
      auto g = oracle_in.realize();
      auto pattern = load_pattern(oracle_pattern, "");
      if (oracle_op == "enumerate") {
        auto list = enumerate_subdivisions(g, pattern);
        std::cout << list.size() << " distinct subdivision subgraphs\n";
      } else if (oracle_op == "exists") {
        std::cout << (exists_subdivision(g, pattern) ? "yes" : "no") << "\n";
      } else if (oracle_op == "pack") {
        auto res = optimal_packing(g, pattern);
        std::cout << "optimal coverage " << res.packing.coverage_fraction
                  << (res.certified ? "" : " (budget hit, lower bound only)") << "\n";
      } else {
        throw Error(Errc::config_error, "--op " + oracle_op);
      }
      return kExitOk;
    }

    if (*exp_cmd) {
      auto spec = experiment_spec_from_json(read_file(exp_config));
      auto rows = run_experiment(spec);
      auto csv = outcomes_to_csv(rows);
      if (exp_out.empty())
        std::cout << csv;
      else
        write_file(exp_out, csv);
      bool all_ok = true;
      for (const auto& r : rows) all_ok &= !r.emitted || r.all_invariants_ok;
      return all_ok ? kExitOk : kExitInvariant;
    }

    if (*cal_cmd) {
      auto spec = experiment_spec_from_json(read_file(cal_config));
      auto rep = calibrate(spec);
      if (cal_out.empty())
        std::cout << rep.report_json;
      else
        write_file(cal_out, rep.report_json);
      std::cerr << "recommended cell " << rep.best_cell << ": p=" << rep.recommended.p
                << " m=" << rep.recommended.m << " epsilon=" << rep.recommended.epsilon
                << " gamma=" << rep.recommended.gamma
                << " u_prime=" << rep.recommended.u_prime_fraction << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::io_error:
      case Errc::config_error:
      case Errc::unknown_name:
      case Errc::invalid_degree:
      case Errc::infeasible_degree_sequence:
        return kExitConfig;
      default:
        return kExitInvariant;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitConfig;
}
