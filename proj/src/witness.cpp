#include "tfpack/witness.hpp"

#include <algorithm>
#include <set>

namespace tfpack {

const char* witness_reason_name(WitnessReason r) {
  switch (r) {
    case WitnessReason::vertex_out_of_range: return "VertexOutOfRange";
    case WitnessReason::branch_map_arity: return "BranchMapArity";
    case WitnessReason::branch_map_not_injective: return "BranchMapNotInjective";
    case WitnessReason::path_count_mismatch: return "PathCountMismatch";
    case WitnessReason::path_endpoint_mismatch: return "PathEndpointMismatch";
    case WitnessReason::path_too_short: return "PathTooShort";
    case WitnessReason::path_not_in_graph: return "PathNotInGraph";
    case WitnessReason::path_repeats_vertex: return "PathRepeatsVertex";
    case WitnessReason::internal_overlap: return "InternalOverlap";
    case WitnessReason::iso_count_mismatch: return "IsoCountMismatch";
    case WitnessReason::iso_overlap: return "IsoOverlap";
  }
  return "?";
}

std::vector<Vertex> SubdivisionWitness::vertex_set() const {
  std::vector<Vertex> all(branch_map);
  for (const auto& path : subdiv_paths) all.insert(all.end(), path.begin(), path.end());
  all.insert(all.end(), iso_vertices.begin(), iso_vertices.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

int64_t SubdivisionWitness::size() const { return static_cast<int64_t>(vertex_set().size()); }

WitnessReport validate_witness(const HostGraph& g, const PatternGraph& pattern,
                               const SubdivisionWitness& w) {
  WitnessReport rep;
  auto fail = [&](WitnessReason r) {
    rep.valid = false;
    rep.reasons.push_back(r);
  };

  const HostGraph& core = pattern.core();
  if (static_cast<int>(w.branch_map.size()) != core.vertex_count()) {
    fail(WitnessReason::branch_map_arity);
    return rep;
  }
  if (static_cast<int>(w.subdiv_paths.size()) != core.edge_count()) {
    fail(WitnessReason::path_count_mismatch);
    return rep;
  }
  if (static_cast<int>(w.iso_vertices.size()) != pattern.isolated_count())
    fail(WitnessReason::iso_count_mismatch);

  for (Vertex v : w.branch_map)
    if (!g.in_range(v)) fail(WitnessReason::vertex_out_of_range);
  for (Vertex v : w.iso_vertices)
    if (!g.in_range(v)) fail(WitnessReason::vertex_out_of_range);
  for (const auto& path : w.subdiv_paths)
    for (Vertex v : path)
      if (!g.in_range(v)) fail(WitnessReason::vertex_out_of_range);
  if (!rep.valid) return rep;

  {
    auto sorted = w.branch_map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(WitnessReason::branch_map_not_injective);
  }

  // Branch vertices and isolated stand-ins must all be distinct.
  std::set<Vertex> occupied(w.branch_map.begin(), w.branch_map.end());
  for (Vertex v : w.iso_vertices) {
    if (!occupied.insert(v).second) fail(WitnessReason::iso_overlap);
  }

  // Each path realizes one canonical core edge; internal vertices are private.
  for (size_t i = 0; i < w.subdiv_paths.size(); ++i) {
    const auto& path = w.subdiv_paths[i];
    auto [cu, cv] = core.edges()[i];
    if (path.size() < 2) {
      fail(WitnessReason::path_too_short);
      continue;
    }
    if (path.front() != w.branch_map[static_cast<size_t>(cu)] ||
        path.back() != w.branch_map[static_cast<size_t>(cv)])
      fail(WitnessReason::path_endpoint_mismatch);
    for (size_t k = 0; k + 1 < path.size(); ++k)
      if (!g.has_edge(path[k], path[k + 1])) fail(WitnessReason::path_not_in_graph);

    std::set<Vertex> on_path;
    bool repeats = false;
    for (Vertex v : path) repeats |= !on_path.insert(v).second;
    if (repeats) fail(WitnessReason::path_repeats_vertex);

    for (size_t k = 1; k + 1 < path.size(); ++k) {
      if (!occupied.insert(path[k]).second) fail(WitnessReason::internal_overlap);
    }
  }
  return rep;
}

void Packing::recompute_coverage(Vertex host_n) {
  covered.clear();
  for (const auto& w : witnesses) {
    auto vs = w.vertex_set();
    covered.insert(covered.end(), vs.begin(), vs.end());
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  coverage_fraction =
      host_n == 0 ? 0.0 : static_cast<double>(covered.size()) / static_cast<double>(host_n);
}

PackingReport validate_packing(const HostGraph& g, const PatternGraph& pattern,
                               const Packing& p) {
  PackingReport rep;
  std::vector<int> owner(static_cast<size_t>(g.vertex_count()), -1);
  int64_t covered = 0;
  for (size_t i = 0; i < p.witnesses.size(); ++i) {
    auto wrep = validate_witness(g, pattern, p.witnesses[i]);
    if (!wrep.valid) {
      rep.valid = false;
      rep.reasons.emplace_back(PackingReason::witness_invalid, static_cast<int>(i));
    }
    rep.witness_reports.push_back(std::move(wrep));
    for (Vertex v : p.witnesses[i].vertex_set()) {
      if (!g.in_range(v)) continue;  // already reported by the witness check
      if (owner[static_cast<size_t>(v)] >= 0) {
        rep.valid = false;
        rep.reasons.emplace_back(PackingReason::witness_overlap, static_cast<int>(i));
      } else {
        owner[static_cast<size_t>(v)] = static_cast<int>(i);
        ++covered;
      }
    }
  }
  rep.coverage = g.vertex_count() == 0
                     ? 0.0
                     : static_cast<double>(covered) / static_cast<double>(g.vertex_count());
  return rep;
}

}  // namespace tfpack
