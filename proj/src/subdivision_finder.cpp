#include "tfpack/subdivision_finder.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "tfpack/errors.hpp"

namespace tfpack {

namespace {

// Core-vertex assignment order: highest pattern degree first, ids break ties.
std::vector<int> branch_order(const HostGraph& core) {
  std::vector<int> order(static_cast<size_t>(core.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (core.degree(a) != core.degree(b)) return core.degree(a) > core.degree(b);
    return a < b;
  });
  return order;
}

struct ExhaustiveSearch {
  const HostGraph& g;
  const HostGraph& core;
  int64_t budget;
  int64_t nodes = 0;
  bool out_of_budget = false;

  std::vector<int> order;             // core vertices in assignment order
  std::vector<Vertex> branch;         // core vertex -> host vertex (-1 unset)
  std::vector<char> used;             // host vertices consumed
  std::vector<std::vector<Vertex>> paths;  // aligned with core.edges()

  ExhaustiveSearch(const HostGraph& g_, const HostGraph& core_, int64_t budget_)
      : g(g_), core(core_), budget(budget_), order(branch_order(core_)),
        branch(static_cast<size_t>(core_.vertex_count()), -1),
        used(static_cast<size_t>(g_.vertex_count()), 0),
        paths(core_.edges().size()) {}

  bool tick() {
    if (++nodes > budget) out_of_budget = true;
    return !out_of_budget;
  }

  bool assign(size_t idx) {
    if (idx == order.size()) return route(0);
    int cu = order[idx];
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (used[static_cast<size_t>(v)] || g.degree(v) < core.degree(cu)) continue;
      if (!tick()) return false;
      branch[static_cast<size_t>(cu)] = v;
      used[static_cast<size_t>(v)] = 1;
      if (assign(idx + 1)) return true;
      if (out_of_budget) return false;
      branch[static_cast<size_t>(cu)] = -1;
      used[static_cast<size_t>(v)] = 0;
    }
    return false;
  }

  // Enumerate internally disjoint paths for edge ei onward, all path systems.
  bool route(size_t ei) {
    if (ei == core.edges().size()) return true;
    auto [cu, cv] = core.edges()[ei];
    Vertex a = branch[static_cast<size_t>(cu)];
    Vertex b = branch[static_cast<size_t>(cv)];
    std::vector<Vertex> path{a};
    return extend(ei, path, b);
  }

  bool extend(size_t ei, std::vector<Vertex>& path, Vertex target) {
    Vertex cur = path.back();
    for (Vertex u : g.neighbors(cur)) {
      if (!tick()) return false;
      if (u == target) {
        path.push_back(u);
        paths[ei] = path;
        if (route(ei + 1)) return true;
        if (out_of_budget) return false;
        path.pop_back();
        continue;
      }
      if (used[static_cast<size_t>(u)]) continue;
      used[static_cast<size_t>(u)] = 1;
      path.push_back(u);
      if (extend(ei, path, target)) return true;
      path.pop_back();
      used[static_cast<size_t>(u)] = 0;
      if (out_of_budget) return false;
    }
    return false;
  }
};

// Iteratively strip vertices of degree below half the average degree.
std::vector<Vertex> dense_core_vertices(const HostGraph& g) {
  std::vector<char> alive(static_cast<size_t>(g.vertex_count()), 1);
  std::vector<int> deg(static_cast<size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) deg[static_cast<size_t>(v)] = g.degree(v);
  int64_t vcount = g.vertex_count();
  int64_t esum = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) esum += deg[static_cast<size_t>(v)];
  bool changed = true;
  while (changed && vcount > 0) {
    changed = false;
    double avg = static_cast<double>(esum) / static_cast<double>(vcount);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!alive[static_cast<size_t>(v)]) continue;
      if (deg[static_cast<size_t>(v)] < avg / 2.0) {
        alive[static_cast<size_t>(v)] = 0;
        --vcount;
        esum -= 2 * deg[static_cast<size_t>(v)];
        for (Vertex u : g.neighbors(v))
          if (alive[static_cast<size_t>(u)]) --deg[static_cast<size_t>(u)];
        deg[static_cast<size_t>(v)] = 0;
        changed = true;
      }
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (alive[static_cast<size_t>(v)]) keep.push_back(v);
  return keep;
}

struct GreedySearch {
  const HostGraph& g;
  const HostGraph& core;
  int64_t budget;
  int64_t nodes = 0;
  bool out_of_budget = false;

  std::vector<int> order;
  std::vector<Vertex> candidates;  // hosts by descending degree
  std::vector<Vertex> branch;
  std::vector<char> used;
  std::vector<std::vector<Vertex>> paths;

  GreedySearch(const HostGraph& g_, const HostGraph& core_, int64_t budget_)
      : g(g_), core(core_), budget(budget_), order(branch_order(core_)),
        branch(static_cast<size_t>(core_.vertex_count()), -1),
        used(static_cast<size_t>(g_.vertex_count()), 0),
        paths(core_.edges().size()) {
    candidates.resize(static_cast<size_t>(g.vertex_count()));
    std::iota(candidates.begin(), candidates.end(), 0);
    std::sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return a < b;
    });
  }

  bool tick() {
    if (++nodes > budget) out_of_budget = true;
    return !out_of_budget;
  }

  bool assign(size_t idx) {
    if (idx == order.size()) return route_all();
    int cu = order[idx];
    for (Vertex v : candidates) {
      if (used[static_cast<size_t>(v)] || g.degree(v) < core.degree(cu)) continue;
      if (!tick()) return false;
      branch[static_cast<size_t>(cu)] = v;
      used[static_cast<size_t>(v)] = 1;
      if (assign(idx + 1)) return true;
      branch[static_cast<size_t>(cu)] = -1;
      used[static_cast<size_t>(v)] = 0;
      if (out_of_budget) return false;
    }
    return false;
  }

  // One shortest path per pattern edge, internal vertices consumed on use;
  // no re-routing of earlier edges (branch backtracking covers failures).
  bool route_all() {
    std::vector<std::vector<Vertex>> routed;
    std::vector<Vertex> consumed;
    for (auto [cu, cv] : core.edges()) {
      if (!tick()) break;
      auto path = bfs_path(branch[static_cast<size_t>(cu)], branch[static_cast<size_t>(cv)]);
      if (path.empty()) {
        for (Vertex v : consumed) used[static_cast<size_t>(v)] = 0;
        return false;
      }
      for (size_t k = 1; k + 1 < path.size(); ++k) {
        used[static_cast<size_t>(path[k])] = 1;
        consumed.push_back(path[k]);
      }
      routed.push_back(std::move(path));
    }
    if (out_of_budget || routed.size() != core.edges().size()) {
      for (Vertex v : consumed) used[static_cast<size_t>(v)] = 0;
      return false;
    }
    paths = std::move(routed);
    return true;
  }

  std::vector<Vertex> bfs_path(Vertex a, Vertex b) {
    std::vector<Vertex> parent(static_cast<size_t>(g.vertex_count()), -2);
    std::deque<Vertex> queue{a};
    parent[static_cast<size_t>(a)] = -1;
    while (!queue.empty()) {
      Vertex cur = queue.front();
      queue.pop_front();
      for (Vertex u : g.neighbors(cur)) {
        if (u == b) {
          std::vector<Vertex> path{b, cur};
          while (parent[static_cast<size_t>(path.back())] >= 0)
            path.push_back(parent[static_cast<size_t>(path.back())]);
          std::reverse(path.begin(), path.end());
          return path;
        }
        if (parent[static_cast<size_t>(u)] != -2 || used[static_cast<size_t>(u)]) continue;
        parent[static_cast<size_t>(u)] = cur;
        queue.push_back(u);
      }
    }
    return {};
  }
};

SubdivisionWitness make_witness(const std::vector<Vertex>& branch,
                                std::vector<std::vector<Vertex>> paths) {
  SubdivisionWitness w;
  w.branch_map = branch;
  w.subdiv_paths = std::move(paths);
  return w;
}

}  // namespace

FindResult find_subdivision(const HostGraph& g, const PatternGraph& pattern, FinderBudget budget) {
  if (pattern.isolated_count() != 0)
    throw Error(Errc::config_error, "finder requires an isolated-vertex-free pattern");
  const HostGraph& core = pattern.core();
  FindResult res;
  if (core.vertex_count() == 0) {
    res.status = FindStatus::found;  // empty pattern: the empty witness
    return res;
  }

  auto strategy = budget.strategy;
  if (strategy == FinderStrategy::auto_pick)
    strategy = g.vertex_count() <= 10 ? FinderStrategy::exhaustive : FinderStrategy::dense_greedy;

  if (strategy == FinderStrategy::exhaustive) {
    ExhaustiveSearch search(g, core, budget.node_budget);
    bool found = search.assign(0);
    res.nodes_used = search.nodes;
    if (found) {
      res.status = FindStatus::found;
      res.witness = make_witness(search.branch, std::move(search.paths));
    } else {
      res.status = search.out_of_budget ? FindStatus::unknown : FindStatus::absent;
    }
  } else {
    GreedySearch search(g, core, budget.node_budget);
    bool found = search.assign(0);
    res.nodes_used = search.nodes;
    if (!found && !search.out_of_budget) {
      // Retry on the dense core with the remaining budget.
      auto keep = dense_core_vertices(g);
      if (static_cast<Vertex>(keep.size()) < g.vertex_count() && !keep.empty()) {
        auto [sub, back] = induced_subgraph(g, keep);
        GreedySearch retry(sub, core, budget.node_budget - search.nodes);
        if (retry.assign(0)) {
          for (auto& v : retry.branch) v = back[static_cast<size_t>(v)];
          for (auto& path : retry.paths)
            for (auto& v : path) v = back[static_cast<size_t>(v)];
          res.status = FindStatus::found;
          res.witness = make_witness(retry.branch, std::move(retry.paths));
          found = true;
        }
        res.nodes_used += retry.nodes;
      }
    }
    if (found && res.status != FindStatus::found) {
      res.status = FindStatus::found;
      res.witness = make_witness(search.branch, std::move(search.paths));
    } else if (!found) {
      res.status = FindStatus::unknown;
    }
  }

  if (res.status == FindStatus::found) {
    auto rep = validate_witness(g, pattern, res.witness);
    if (!rep.valid) throw Error(Errc::label_missing, "finder produced an invalid witness");
  }
  return res;
}

SubdivisionWitness find_in_complete_bipartite(const HostGraph& g, const std::vector<Vertex>& part_x,
                                              const std::vector<Vertex>& part_y,
                                              const PatternGraph& pattern) {
  if (pattern.isolated_count() != 0)
    throw Error(Errc::config_error, "bipartite construction requires an isolated-vertex-free pattern");
  const HostGraph& core = pattern.core();
  int64_t need = static_cast<int64_t>(core.vertex_count()) * core.vertex_count();
  if (static_cast<int64_t>(part_x.size()) < need || static_cast<int64_t>(part_y.size()) < need)
    throw Error(Errc::parts_too_small,
                "|A_x|=" + std::to_string(part_x.size()) + " |A_y|=" + std::to_string(part_y.size()) +
                    " need >= " + std::to_string(need));
  std::vector<Vertex> xs(part_x), ys(part_y);
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  SubdivisionWitness w;
  w.branch_map.assign(xs.begin(), xs.begin() + core.vertex_count());
  size_t next_mid = 0;
  for (auto [cu, cv] : core.edges()) {
    Vertex mid = ys[next_mid++];
    w.subdiv_paths.push_back({w.branch_map[static_cast<size_t>(cu)], mid,
                              w.branch_map[static_cast<size_t>(cv)]});
  }
  auto rep = validate_witness(g, pattern, w);
  if (!rep.valid)
    throw Error(Errc::config_error, "parts are not completely joined in the host graph");
  return w;
}

bool mader_threshold_check(const HostGraph& g, double threshold) {
  if (g.vertex_count() == 0) return false;
  return 2.0 * static_cast<double>(g.edge_count()) >=
         threshold * static_cast<double>(g.vertex_count());
}

}  // namespace tfpack
