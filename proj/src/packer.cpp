#include "tfpack/packer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tfpack/errors.hpp"
#include "tfpack/partitioner.hpp"
#include "tfpack/rng.hpp"

namespace tfpack {

void PackerConfig::validate() const {
  if (p <= 0.0 || p >= 0.5) throw Error(Errc::config_error, "p=" + std::to_string(p) + " outside (0, 1/2)");
  if (m < 2) throw Error(Errc::config_error, "m=" + std::to_string(m));
  if (epsilon <= 0.0 || epsilon >= 1.0) throw Error(Errc::config_error, "epsilon=" + std::to_string(epsilon));
  if (gamma <= 0.0 || gamma > 0.5) throw Error(Errc::config_error, "gamma=" + std::to_string(gamma));
  if (u_prime_fraction < 0.0 || u_prime_fraction > 1.0)
    throw Error(Errc::config_error, "u_prime_fraction=" + std::to_string(u_prime_fraction));
  if (eta < 0.0 || eta >= 1.0) throw Error(Errc::config_error, "eta=" + std::to_string(eta));
  if (max_outer_rounds < 1) throw Error(Errc::config_error, "max_outer_rounds");
}

AuxiliaryGraph build_aux(const HostGraph& g, const std::vector<Vertex>& u_prime,
                         const std::vector<int>& unused_paths,
                         const std::vector<std::vector<Vertex>>& paths) {
  AuxiliaryGraph aux;
  aux.local_to_host = u_prime;
  std::sort(aux.local_to_host.begin(), aux.local_to_host.end());
  std::vector<int> to_local(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < aux.local_to_host.size(); ++i)
    to_local[static_cast<size_t>(aux.local_to_host[i])] = static_cast<int>(i);

  std::vector<Edge> edges;
  std::vector<int> sorted_paths(unused_paths);
  std::sort(sorted_paths.begin(), sorted_paths.end());
  for (int j : sorted_paths) {
    const auto& path = paths[static_cast<size_t>(j)];
    Vertex x = path.front(), y = path.back();
    bool placed = false;
    for (Vertex a_host : g.neighbors(x)) {
      if (placed) break;
      int a = to_local[static_cast<size_t>(a_host)];
      if (a < 0) continue;
      for (Vertex b_host : g.neighbors(y)) {
        int b = to_local[static_cast<size_t>(b_host)];
        if (b < 0 || b == a) continue;
        Edge key{std::min(a, b), std::max(a, b)};
        if (aux.labels.count(key)) continue;
        aux.labels[key] = {j, key.first == a};
        edges.push_back(key);
        placed = true;
        break;
      }
    }
  }
  aux.graph = build_graph(static_cast<Vertex>(aux.local_to_host.size()), edges);
  return aux;
}

bool AuxiliaryGraph::is_maximal(const HostGraph& g, const std::vector<int>& unused_paths,
                                const std::vector<std::vector<Vertex>>& paths) const {
  std::vector<int> to_local(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < local_to_host.size(); ++i)
    to_local[static_cast<size_t>(local_to_host[i])] = static_cast<int>(i);
  std::vector<char> labeled_path(paths.size(), 0);
  for (const auto& [key, label] : labels) labeled_path[static_cast<size_t>(label.path_index)] = 1;
  for (int j : unused_paths) {
    if (labeled_path[static_cast<size_t>(j)]) continue;
    Vertex x = paths[static_cast<size_t>(j)].front(), y = paths[static_cast<size_t>(j)].back();
    for (Vertex a_host : g.neighbors(x)) {
      int a = to_local[static_cast<size_t>(a_host)];
      if (a < 0) continue;
      for (Vertex b_host : g.neighbors(y)) {
        int b = to_local[static_cast<size_t>(b_host)];
        if (b < 0 || b == a) continue;
        Edge key{std::min(a, b), std::max(a, b)};
        if (!labels.count(key)) return false;  // admissible extension exists
      }
    }
  }
  return true;
}

SubdivisionWitness expand_witness(const SubdivisionWitness& in_aux, const AuxiliaryGraph& aux,
                                  const std::vector<std::vector<Vertex>>& paths) {
  SubdivisionWitness out;
  out.branch_map.reserve(in_aux.branch_map.size());
  for (Vertex b : in_aux.branch_map)
    out.branch_map.push_back(aux.local_to_host[static_cast<size_t>(b)]);

  for (const auto& aux_path : in_aux.subdiv_paths) {
    std::vector<Vertex> host_path;
    for (size_t k = 0; k + 1 < aux_path.size(); ++k) {
      Vertex a = aux_path[k], b = aux_path[k + 1];
      Edge key{std::min(a, b), std::max(a, b)};
      auto it = aux.labels.find(key);
      if (it == aux.labels.end())
        throw Error(Errc::label_missing, "auxiliary edge without a path label");
      const auto& cover_path = paths[static_cast<size_t>(it->second.path_index)];
      // Orient the cover path so that its x-end sits next to `a`.
      bool a_is_x = (key.first == a) == it->second.u_attaches_x;
      if (k == 0) host_path.push_back(aux.local_to_host[static_cast<size_t>(a)]);
      if (a_is_x)
        host_path.insert(host_path.end(), cover_path.begin(), cover_path.end());
      else
        host_path.insert(host_path.end(), cover_path.rbegin(), cover_path.rend());
      host_path.push_back(aux.local_to_host[static_cast<size_t>(b)]);
    }
    out.subdiv_paths.push_back(std::move(host_path));
  }
  return out;
}

namespace {

struct LoopState {
  std::vector<char> used;  // host vertices covered by the family
  std::vector<char> in_w;
  std::vector<SubdivisionWitness> family;
  std::vector<int64_t> family_w_count;
};

int64_t count_w_intersection(const SubdivisionWitness& w, const std::vector<char>& in_w) {
  int64_t c = 0;
  for (Vertex v : w.vertex_set())
    if (in_w[static_cast<size_t>(v)]) ++c;
  return c;
}

}  // namespace

PackResult pack_core(const HostGraph& g, const PatternGraph& pattern, const PackerConfig& cfg,
                     double d_ref) {
  cfg.validate();
  if (pattern.isolated_count() != 0 || pattern.core().edge_count() < 1)
    throw Error(Errc::config_error, "pack_core needs an isolated-vertex-free pattern with an edge");
  if (d_ref < 0) d_ref = g.average_degree();

  PackResult res;
  Rng root(cfg.seed);

  // Stage 1: V/W split. On lemma-window exhaustion fall back to the
  // lower-bounds-only request and record the degradation.
  try {
    auto split = split_V_W(g, cfg.p, cfg.gamma, root.derive(1).next(), d_ref);
    res.v_side = std::move(split.v_side);
    res.w_side = std::move(split.w_side);
    res.stats.split_rounds = split.resample_rounds;
  } catch (const Error& e) {
    if (e.code() != Errc::resample_budget_exhausted && e.code() != Errc::precondition_degree)
      throw Error(Errc::pipeline_stage_failed, std::string("split: ") + e.what());
    PartitionRequest req;
    req.target.resize(static_cast<size_t>(g.vertex_count()));
    std::iota(req.target.begin(), req.target.end(), 0);
    req.track = req.target;
    req.proportions = {1.0 - cfg.p, cfg.p};
    req.gamma = 0.5;
    req.d_ref = d_ref;
    req.upper_bound_mode = false;
    try {
      auto part = partition(g, req, root.derive(1).next());
      res.v_side = std::move(part.classes[0]);
      res.w_side = std::move(part.classes[1]);
      res.stats.split_rounds = part.resample_rounds;
      res.stats.split_degraded = true;
    } catch (const Error& e2) {
      throw Error(Errc::pipeline_stage_failed, std::string("split: ") + e2.what());
    }
  }

  // Stage 2: path cover of G[V].
  try {
    res.cover = build_path_cover(g, res.v_side, cfg.m, d_ref, cfg.gamma, cfg.epsilon,
                                 root.derive(2).next());
  } catch (const Error& e) {
    throw Error(Errc::pipeline_stage_failed, std::string("path cover: ") + e.what());
  }
  res.stats.cover_degraded = res.cover.partition_degraded;
  res.stats.cover_fragments = res.cover.discarded_fragments;
  res.stats.cover_trimmed = res.cover.trimmed_paths;
  res.stats.cover_shortfall = res.cover.shortfall;

  const auto& paths = res.cover.paths;
  const int t = static_cast<int>(paths.size());

  LoopState state;
  state.used.assign(static_cast<size_t>(g.vertex_count()), 0);
  state.in_w.assign(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v : res.w_side) state.in_w[static_cast<size_t>(v)] = 1;

  const double pd = cfg.p * d_ref;
  const double anchor_floor = pd / 3.0;
  const double x_threshold = pd / 2.0;
  const double p1 = cfg.effective_u_prime();
  const int endgame_part = static_cast<int>(std::floor(cfg.epsilon * d_ref / 20.0));
  const int64_t need_part = static_cast<int64_t>(pattern.core_size()) * pattern.core_size();

  auto insert_witness = [&](SubdivisionWitness&& w) {
    auto rep = validate_witness(g, pattern, w);
    if (!rep.valid) throw Error(Errc::label_missing, "expanded witness failed validation");
    auto vs = w.vertex_set();
    for (Vertex v : vs) {
      if (state.used[static_cast<size_t>(v)])
        throw Error(Errc::label_missing, "expanded witness overlaps the family");
    }
    // C1: every cover path is consumed whole or not at all.
    std::vector<char> in_w_set(static_cast<size_t>(g.vertex_count()), 0);
    for (Vertex v : vs) in_w_set[static_cast<size_t>(v)] = 1;
    for (const auto& path : paths) {
      size_t inside = 0;
      for (Vertex v : path) inside += in_w_set[static_cast<size_t>(v)] ? 1u : 0u;
      if (inside != 0 && inside != path.size())
        throw Error(Errc::label_missing, "witness consumes a partial cover path");
    }
    // C2: the witness touches W in at most a 2/m fraction of its size.
    int64_t wcount = count_w_intersection(w, state.in_w);
    if (wcount * cfg.m > 2 * static_cast<int64_t>(vs.size()))
      throw Error(Errc::label_missing, "witness uses too much of W");
    for (Vertex v : vs) state.used[static_cast<size_t>(v)] = 1;
    state.family_w_count.push_back(wcount);
    state.family.push_back(std::move(w));
  };

  double aux_density_sum = 0.0;
  int aux_density_rounds = 0;
  int consecutive_stalls = 0;
  // A stalled round redraws U', so a few retries are worthwhile before
  // declaring the family stable.
  const int stall_cap = 10;
  int round = 0;

  while (round < cfg.max_outer_rounds) {
    ++round;

    // Recompute U, J, X, J' from scratch each round.
    std::vector<int> unused;  // J, with the desk-scale anchor-degree guard
    std::vector<char> w_minus_u(static_cast<size_t>(g.vertex_count()), 0);
    for (Vertex v : res.w_side)
      if (state.used[static_cast<size_t>(v)]) w_minus_u[static_cast<size_t>(v)] = 1;
    std::vector<Vertex> u_set;
    for (Vertex v : res.w_side)
      if (!state.used[static_cast<size_t>(v)]) u_set.push_back(v);

    // Accounting identity for W \ U.
    int64_t family_w_sum = std::accumulate(state.family_w_count.begin(), state.family_w_count.end(),
                                           int64_t{0});
    if (family_w_sum != static_cast<int64_t>(res.w_side.size() - u_set.size()))
      res.stats.accounting_ok = false;

    std::vector<char> u_mask(static_cast<size_t>(g.vertex_count()), 0);
    for (Vertex v : u_set) u_mask[static_cast<size_t>(v)] = 1;

    int j_count = 0;
    for (int j = 0; j < t; ++j) {
      bool untouched = true;
      for (Vertex v : paths[static_cast<size_t>(j)])
        if (state.used[static_cast<size_t>(v)]) {
          untouched = false;
          break;
        }
      if (!untouched) continue;
      ++j_count;
      Vertex x = paths[static_cast<size_t>(j)].front();
      Vertex y = paths[static_cast<size_t>(j)].back();
      // X-filter: endvertices with many neighbors in W \ U are set aside.
      if (g.degree_into(x, w_minus_u) >= x_threshold || g.degree_into(y, w_minus_u) >= x_threshold)
        continue;
      // Desk-scale guard: anchors must genuinely see U.
      if (g.degree_into(x, u_mask) < anchor_floor || g.degree_into(y, u_mask) < anchor_floor)
        continue;
      unused.push_back(j);
    }
    res.stats.j_final = j_count;
    if (j_count == 0) break;

    if (unused.empty() || u_set.empty()) {
      ++res.stats.stalled_rounds;
      if (++consecutive_stalls >= stall_cap) break;
      continue;
    }

    // Fresh U' sample for this round. Consecutive stalls shrink the sample:
    // the edge supply of L scales with the unused paths while its vertex set
    // scales with |U'|, so a smaller sample concentrates L above the density
    // the finder needs.
    std::vector<Vertex> anchors;
    for (int j : unused) {
      anchors.push_back(paths[static_cast<size_t>(j)].front());
      anchors.push_back(paths[static_cast<size_t>(j)].back());
    }
    double p1_round = p1;
    for (int s = 0; s < consecutive_stalls; ++s) p1_round *= 0.65;
    if (!u_set.empty()) {
      double floor_frac = std::min(1.0, 24.0 / static_cast<double>(u_set.size()));
      p1_round = std::max(p1_round, floor_frac);
    }
    // Anchor retention: a tolerance below 1/2 makes the sampler's lower
    // degree bound bite, so anchors keep neighbors in U' (the proof's
    // d(x_i, U') >= eps*d/10 step). A retaining sample may not exist for
    // small fractions; fall back to an unconstrained draw in that case.
    std::vector<Vertex> u_prime;
    if (p1_round >= 1.0) {
      u_prime = u_set;
    } else {
      auto sample_seed = root.derive(1000 + static_cast<uint64_t>(round)).next();
      const double gamma_tight = std::min(cfg.gamma, 0.25);
      try {
        u_prime = sample_subset(g, anchors, u_set, p1_round, gamma_tight,
                                anchor_floor / (1.0 - gamma_tight), sample_seed);
      } catch (const Error&) {
        try {
          u_prime = sample_subset(g, anchors, u_set, p1_round, 0.5, anchor_floor / 0.5,
                                  sample_seed);
        } catch (const Error&) {
          ++res.stats.stalled_rounds;
          if (++consecutive_stalls >= stall_cap) break;
          continue;
        }
      }
    }

    auto aux = build_aux(g, u_prime, unused, paths);
    if (!u_prime.empty()) {
      aux_density_sum += static_cast<double>(aux.graph.edge_count()) /
                         static_cast<double>(u_prime.size());
      ++aux_density_rounds;
    }

    bool inserted = false;
    auto finder_res = find_subdivision(aux.graph, pattern, cfg.finder);
    if (finder_res.status == FindStatus::found) {
      insert_witness(expand_witness(finder_res.witness, aux, paths));
      ++res.stats.insertions;
      inserted = true;
    } else if (endgame_part >= need_part) {
      // Complete-bipartite endgame: an unused path index with both endpoints
      // rich in U' forces L[A_x, A_y] to be complete by maximality.
      std::vector<char> labeled(paths.size(), 0);
      for (const auto& [key, label] : aux.labels) labeled[static_cast<size_t>(label.path_index)] = 1;
      std::vector<int> to_local(static_cast<size_t>(g.vertex_count()), -1);
      for (size_t i = 0; i < aux.local_to_host.size(); ++i)
        to_local[static_cast<size_t>(aux.local_to_host[i])] = static_cast<int>(i);
      for (int j : unused) {
        if (labeled[static_cast<size_t>(j)]) continue;
        Vertex x = paths[static_cast<size_t>(j)].front();
        Vertex y = paths[static_cast<size_t>(j)].back();
        std::vector<Vertex> part_x, part_y;
        for (Vertex nb : g.neighbors(x)) {
          int l = to_local[static_cast<size_t>(nb)];
          if (l >= 0 && static_cast<int>(part_x.size()) < endgame_part) part_x.push_back(l);
        }
        for (Vertex nb : g.neighbors(y)) {
          int l = to_local[static_cast<size_t>(nb)];
          if (l < 0) continue;
          if (std::find(part_x.begin(), part_x.end(), l) != part_x.end()) continue;
          if (static_cast<int>(part_y.size()) < endgame_part) part_y.push_back(l);
        }
        if (static_cast<int64_t>(part_x.size()) < need_part ||
            static_cast<int64_t>(part_y.size()) < need_part)
          continue;
        auto w_aux = find_in_complete_bipartite(aux.graph, part_x, part_y, pattern);
        insert_witness(expand_witness(w_aux, aux, paths));
        ++res.stats.insertions;
        ++res.stats.endgame_insertions;
        inserted = true;
        break;
      }
    }

    if (inserted) {
      consecutive_stalls = 0;
    } else {
      ++res.stats.stalled_rounds;
      if (++consecutive_stalls >= stall_cap) break;
    }
  }
  res.stats.rounds = round;
  res.stats.aux_density_mean = aux_density_rounds ? aux_density_sum / aux_density_rounds : 0.0;

  res.stats.j_final = 0;
  for (const auto& path : paths) {
    bool untouched = true;
    for (Vertex v : path)
      if (state.used[static_cast<size_t>(v)]) {
        untouched = false;
        break;
      }
    if (untouched) ++res.stats.j_final;
  }

  res.packing.witnesses = std::move(state.family);
  res.packing.recompute_coverage(g.vertex_count());
  return res;
}

int select_prefix(const std::vector<int64_t>& sizes_desc, int iso_gap, int64_t n, double eta) {
  const int t = static_cast<int>(sizes_desc.size());
  std::vector<int64_t> z(static_cast<size_t>(t) + 1, 0);
  for (int j = 1; j <= t; ++j)
    z[static_cast<size_t>(j)] = z[static_cast<size_t>(j - 1)] + sizes_desc[static_cast<size_t>(j - 1)] + iso_gap;
  const double target = (1.0 - eta) * static_cast<double>(n);
  int l = t;
  for (int j = 1; j <= t; ++j)
    if (static_cast<double>(z[static_cast<size_t>(j)]) >= target) {
      l = j;
      break;
    }
  while (l > 0 && z[static_cast<size_t>(l)] > n) --l;
  return l;
}

PackFullResult pack_full(const HostGraph& g, const PatternGraph& f, const PackerConfig& cfg,
                         double d_ref) {
  cfg.validate();
  PackFullResult out;
  const Vertex n = g.vertex_count();
  if (d_ref < 0) d_ref = g.average_degree();

  if (f.core().edge_count() == 0) {
    // Edge-free pattern: witnesses are groups of |F| distinct vertices.
    const int fsize = f.size();
    if (fsize == 0) throw Error(Errc::config_error, "empty pattern");
    int groups = n / fsize;
    for (int k = 0; k < groups; ++k) {
      SubdivisionWitness w;
      for (int i = 0; i < fsize; ++i) w.iso_vertices.push_back(k * fsize + i);
      out.packing.witnesses.push_back(std::move(w));
    }
    out.packing.recompute_coverage(n);
    out.kept = groups;
    out.target_met = out.packing.coverage_fraction >= (1.0 - cfg.eta) - 1e-12;
    return out;
  }

  // Reserve set S of the lowest ids, pack the isolated-free core on G - S.
  int s_size = std::min<int>(static_cast<int>(std::floor(cfg.gamma * d_ref)), n > 0 ? n - 1 : 0);
  std::vector<Vertex> keep;
  for (Vertex v = static_cast<Vertex>(s_size); v < n; ++v) keep.push_back(v);
  auto [sub, back] = induced_subgraph(g, keep);

  PatternGraph core_pattern(f.core());
  PackResult core = pack_core(sub, core_pattern, cfg, d_ref);

  // Remap everything to host ids.
  auto remap = [&](Vertex v) { return back[static_cast<size_t>(v)]; };
  for (auto& w : core.packing.witnesses) {
    for (auto& v : w.branch_map) v = remap(v);
    for (auto& path : w.subdiv_paths)
      for (auto& v : path) v = remap(v);
  }
  core.packing.recompute_coverage(n);
  for (auto& path : core.cover.paths)
    for (auto& v : path) v = remap(v);
  for (auto& v : core.cover.endvertices) v = remap(v);
  for (auto& v : core.v_side) v = remap(v);
  for (auto& v : core.w_side) v = remap(v);

  // Sort by size descending; ties by vertex set for determinism.
  std::stable_sort(core.packing.witnesses.begin(), core.packing.witnesses.end(),
                   [](const SubdivisionWitness& a, const SubdivisionWitness& b) {
                     auto va = a.vertex_set(), vb = b.vertex_set();
                     if (va.size() != vb.size()) return va.size() > vb.size();
                     return va < vb;
                   });

  std::vector<int64_t> sizes;
  for (const auto& w : core.packing.witnesses) sizes.push_back(w.size());
  const int gap = f.isolated_count();
  int l = select_prefix(sizes, gap, n, cfg.eta);

  // Spare-vertex pool: never on a cover path and in no witness; ascending.
  std::vector<char> excluded(static_cast<size_t>(n), 0);
  for (const auto& path : core.cover.paths)
    for (Vertex v : path) excluded[static_cast<size_t>(v)] = 1;
  for (const auto& w : core.packing.witnesses)
    for (Vertex v : w.vertex_set()) excluded[static_cast<size_t>(v)] = 1;
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v)
    if (!excluded[static_cast<size_t>(v)]) pool.push_back(v);

  if (gap > 0)
    while (l > 0 && static_cast<int64_t>(l) * gap > static_cast<int64_t>(pool.size())) --l;

  out.kept = l;
  out.dropped = static_cast<int>(core.packing.witnesses.size()) - l;
  size_t next_spare = 0;
  for (int i = 0; i < l; ++i) {
    SubdivisionWitness w = core.packing.witnesses[static_cast<size_t>(i)];
    for (int k = 0; k < gap; ++k) w.iso_vertices.push_back(pool[next_spare++]);
    out.packing.witnesses.push_back(std::move(w));
  }
  out.packing.recompute_coverage(n);
  out.target_met = out.packing.coverage_fraction >= (1.0 - cfg.eta) - 1e-12;
  out.core = std::move(core);
  return out;
}

}  // namespace tfpack
