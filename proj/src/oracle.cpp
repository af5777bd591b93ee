#include "tfpack/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tfpack/errors.hpp"

namespace tfpack {

namespace {

void check_limits(const HostGraph& g, const PatternGraph& pattern, const OracleLimits& limits) {
  if (g.vertex_count() > limits.max_n)
    throw Error(Errc::limits_exceeded, "|G|=" + std::to_string(g.vertex_count()) +
                                           " > max_n=" + std::to_string(limits.max_n));
  if (pattern.core().edge_count() > limits.max_pattern_edges)
    throw Error(Errc::limits_exceeded, "e(F)=" + std::to_string(pattern.core().edge_count()) +
                                           " > max=" + std::to_string(limits.max_pattern_edges));
}

// Canonical key of a witness: its subdivision subgraph as (vertices, edges).
using SubgraphKey = std::pair<std::vector<Vertex>, std::vector<Edge>>;

SubgraphKey witness_key(const SubdivisionWitness& w) {
  SubgraphKey key;
  key.first = w.vertex_set();
  for (const auto& path : w.subdiv_paths)
    for (size_t k = 0; k + 1 < path.size(); ++k) {
      Vertex a = path[k], b = path[k + 1];
      key.second.emplace_back(std::min(a, b), std::max(a, b));
    }
  std::sort(key.second.begin(), key.second.end());
  key.second.erase(std::unique(key.second.begin(), key.second.end()), key.second.end());
  return key;
}

// Plain depth-first enumeration over branch injections and path systems,
// in ascending vertex order (deliberately unlike the finder's ordering).
struct Enumerator {
  const HostGraph& g;
  const HostGraph& core;
  int64_t budget;
  bool stop_at_first;

  int64_t nodes = 0;
  bool found_any = false;
  std::vector<Vertex> branch;
  std::vector<char> used;
  std::vector<std::vector<Vertex>> paths;
  std::set<SubgraphKey> seen;
  std::vector<SubdivisionWitness> out;

  Enumerator(const HostGraph& g_, const HostGraph& core_, int64_t budget_, bool stop_first)
      : g(g_), core(core_), budget(budget_), stop_at_first(stop_first),
        branch(static_cast<size_t>(core_.vertex_count()), -1),
        used(static_cast<size_t>(g_.vertex_count()), 0),
        paths(core_.edges().size()) {}

  void tick() {
    if (++nodes > budget) throw Error(Errc::limits_exceeded, "oracle node budget");
  }

  bool done() const { return stop_at_first && found_any; }

  void assign(int cu) {
    if (done()) return;
    if (cu == core.vertex_count()) {
      route(0);
      return;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      tick();
      branch[static_cast<size_t>(cu)] = v;
      used[static_cast<size_t>(v)] = 1;
      assign(cu + 1);
      used[static_cast<size_t>(v)] = 0;
      branch[static_cast<size_t>(cu)] = -1;
      if (done()) return;
    }
  }

  void route(size_t ei) {
    if (done()) return;
    if (ei == core.edges().size()) {
      SubdivisionWitness w;
      w.branch_map = branch;
      w.subdiv_paths = paths;
      if (seen.insert(witness_key(w)).second) out.push_back(std::move(w));
      found_any = true;
      return;
    }
    auto [cu, cv] = core.edges()[ei];
    std::vector<Vertex> path{branch[static_cast<size_t>(cu)]};
    walk(ei, path, branch[static_cast<size_t>(cv)]);
  }

  void walk(size_t ei, std::vector<Vertex>& path, Vertex target) {
    if (done()) return;
    Vertex cur = path.back();
    for (Vertex u : g.neighbors(cur)) {
      tick();
      if (u == target) {
        path.push_back(u);
        paths[ei] = path;
        route(ei + 1);
        path.pop_back();
        if (done()) return;
        continue;
      }
      if (used[static_cast<size_t>(u)]) continue;
      used[static_cast<size_t>(u)] = 1;
      path.push_back(u);
      walk(ei, path, target);
      path.pop_back();
      used[static_cast<size_t>(u)] = 0;
      if (done()) return;
    }
  }
};

}  // namespace

std::vector<SubdivisionWitness> enumerate_subdivisions(const HostGraph& g,
                                                       const PatternGraph& pattern,
                                                       const OracleLimits& limits) {
  check_limits(g, pattern, limits);
  if (pattern.isolated_count() != 0)
    throw Error(Errc::config_error, "oracle requires an isolated-vertex-free pattern");
  Enumerator en(g, pattern.core(), limits.node_budget, false);
  if (pattern.core().vertex_count() <= g.vertex_count()) en.assign(0);
  return std::move(en.out);
}

bool exists_subdivision(const HostGraph& g, const PatternGraph& pattern,
                        const OracleLimits& limits) {
  check_limits(g, pattern, limits);
  if (pattern.isolated_count() != 0)
    throw Error(Errc::config_error, "oracle requires an isolated-vertex-free pattern");
  Enumerator en(g, pattern.core(), limits.node_budget, true);
  if (pattern.core().vertex_count() <= g.vertex_count()) en.assign(0);
  return en.found_any;
}

namespace {

struct PackSearch {
  std::vector<uint64_t> vset_masks;     // witness vertex sets, n <= 12 fits easily
  std::vector<uint64_t> suffix_union;   // union of vset_masks[idx..]
  int64_t budget;

  int64_t nodes = 0;
  bool certified = true;
  std::vector<int> best;
  int best_cover = -1;
  std::vector<int> current;
  uint64_t used_mask = 0;

  PackSearch(const std::vector<std::vector<Vertex>>& vsets, int64_t budget_) : budget(budget_) {
    vset_masks.reserve(vsets.size());
    for (const auto& vs : vsets) {
      uint64_t mask = 0;
      for (Vertex v : vs) mask |= uint64_t{1} << v;
      vset_masks.push_back(mask);
    }
    suffix_union.assign(vset_masks.size() + 1, 0);
    for (size_t i = vset_masks.size(); i-- > 0;)
      suffix_union[i] = suffix_union[i + 1] | vset_masks[i];
  }

  void run(size_t idx, int covered) {
    if (++nodes > budget) {
      certified = false;
      return;
    }
    if (covered > best_cover) {
      best_cover = covered;
      best = current;
    }
    if (idx == vset_masks.size()) return;
    // Bound: only vertices reachable by remaining witnesses can still be covered.
    if (covered + __builtin_popcountll(suffix_union[idx] & ~used_mask) <= best_cover) return;
    for (size_t i = idx; i < vset_masks.size(); ++i) {
      if (!certified) return;
      uint64_t mask = vset_masks[i];
      if (mask & used_mask) continue;
      used_mask |= mask;
      current.push_back(static_cast<int>(i));
      run(i + 1, covered + __builtin_popcountll(mask));
      current.pop_back();
      used_mask &= ~mask;
    }
  }
};

}  // namespace

OptimalPacking optimal_packing(const HostGraph& g, const PatternGraph& pattern,
                               const OracleLimits& limits) {
  auto witnesses = enumerate_subdivisions(g, pattern, limits);
  // Larger witnesses first makes the remaining-vertex bound bite earlier.
  std::sort(witnesses.begin(), witnesses.end(), [](const auto& a, const auto& b) {
    auto va = a.vertex_set(), vb = b.vertex_set();
    if (va.size() != vb.size()) return va.size() > vb.size();
    return va < vb;
  });
  std::vector<std::vector<Vertex>> vsets;
  vsets.reserve(witnesses.size());
  for (const auto& w : witnesses) vsets.push_back(w.vertex_set());

  PackSearch search(vsets, limits.node_budget);
  search.run(0, 0);

  OptimalPacking out;
  out.nodes_used = search.nodes;
  out.certified = search.certified;
  for (int i : search.best) out.packing.witnesses.push_back(witnesses[static_cast<size_t>(i)]);
  out.packing.recompute_coverage(g.vertex_count());
  return out;
}

namespace {

// 32-bit adjacency rows are plenty for n <= 8.
using Mask = uint32_t;

std::vector<Mask> graph_rows(const HostGraph& g) {
  std::vector<Mask> rows(static_cast<size_t>(g.vertex_count()), 0);
  for (auto [u, v] : g.edges()) {
    rows[static_cast<size_t>(u)] |= Mask{1} << v;
    rows[static_cast<size_t>(v)] |= Mask{1} << u;
  }
  return rows;
}

// Canonical form: lexicographically smallest sequence of adjacency columns
// over all vertex orders. DFS; `tight` tracks whether the current prefix
// still equals the best, which makes the prune an O(1) comparison.
struct Canonicalizer {
  const std::vector<Mask>& rows;
  int n;
  std::vector<int> perm;  // position -> original vertex
  std::vector<char> taken;
  std::vector<uint64_t> best_bits;
  std::vector<uint64_t> cur_bits;
  bool have_best = false;

  explicit Canonicalizer(const std::vector<Mask>& rows_)
      : rows(rows_), n(static_cast<int>(rows_.size())), taken(static_cast<size_t>(n), 0) {}

  // Column "pos": adjacency of the new vertex to already-placed ones.
  uint64_t column_bits(int v, int pos) const {
    uint64_t bits = 0;
    for (int k = 0; k < pos; ++k)
      if (rows[static_cast<size_t>(perm[static_cast<size_t>(k)])] >> v & 1) bits |= uint64_t{1} << k;
    return bits;
  }

  void dfs(int pos, bool tight) {
    if (pos == n) {
      if (!have_best || cur_bits < best_bits) {
        best_bits = cur_bits;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (taken[static_cast<size_t>(v)]) continue;
      uint64_t bits = column_bits(v, pos);
      bool next_tight = false;
      if (have_best && tight) {
        if (bits > best_bits[static_cast<size_t>(pos)]) continue;
        next_tight = bits == best_bits[static_cast<size_t>(pos)];
      }
      taken[static_cast<size_t>(v)] = 1;
      perm.push_back(v);
      cur_bits.push_back(bits);
      dfs(pos + 1, next_tight);
      cur_bits.pop_back();
      perm.pop_back();
      taken[static_cast<size_t>(v)] = 0;
    }
  }

  std::vector<uint64_t> canonical() {
    dfs(0, true);
    return best_bits;
  }
};

std::vector<uint64_t> canonical_form(const HostGraph& g) {
  auto rows = graph_rows(g);
  Canonicalizer canon(rows);
  return canon.canonical();
}

}  // namespace

std::vector<HostGraph> enumerate_connected_graphs(int n) {
  if (n < 1) return {};
  // all_graphs[k] holds one representative per isomorphism class on k+1 vertices.
  std::vector<std::vector<HostGraph>> all_graphs(static_cast<size_t>(n));
  all_graphs[0].push_back(build_graph(1, {}));
  for (int k = 2; k <= n; ++k) {
    std::set<std::vector<uint64_t>> seen;
    std::vector<HostGraph> next;
    for (const auto& base : all_graphs[static_cast<size_t>(k - 2)]) {
      std::vector<Edge> base_edges = base.edges();
      for (Mask nb = 0; nb < (Mask{1} << (k - 1)); ++nb) {
        std::vector<Edge> edges = base_edges;
        for (int v = 0; v < k - 1; ++v)
          if (nb >> v & 1) edges.emplace_back(v, k - 1);
        HostGraph g = build_graph(k, edges);
        auto key = canonical_form(g);
        if (seen.insert(std::move(key)).second) next.push_back(std::move(g));
      }
    }
    all_graphs[static_cast<size_t>(k - 1)] = std::move(next);
  }
  std::vector<HostGraph> connected;
  for (auto& g : all_graphs[static_cast<size_t>(n - 1)])
    if (g.is_connected()) connected.push_back(std::move(g));
  return connected;
}

}  // namespace tfpack
