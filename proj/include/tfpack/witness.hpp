#pragma once

#include <string>
#include <vector>

#include "tfpack/host_graph.hpp"
#include "tfpack/pattern.hpp"

namespace tfpack {

/// Certificate that a subgraph of the host is a subdivision of the pattern.
/// branch_map[k] hosts core-pattern vertex k; subdiv_paths[i] is the full
/// vertex sequence replacing the i-th canonical core edge (endpoints are the
/// mapped branch vertices, in the core edge's (u,v) order); iso_vertices
/// stand in for the pattern's isolated vertices.
struct SubdivisionWitness {
  std::vector<Vertex> branch_map;
  std::vector<std::vector<Vertex>> subdiv_paths;
  std::vector<Vertex> iso_vertices;

  /// All host vertices used by the witness, sorted, without duplicates
  /// (duplicates would be a validation failure anyway).
  std::vector<Vertex> vertex_set() const;
  int64_t size() const;
};

enum class WitnessReason {
  vertex_out_of_range,
  branch_map_arity,
  branch_map_not_injective,
  path_count_mismatch,
  path_endpoint_mismatch,
  path_too_short,
  path_not_in_graph,
  path_repeats_vertex,
  internal_overlap,
  iso_count_mismatch,
  iso_overlap,
};

const char* witness_reason_name(WitnessReason r);

struct WitnessReport {
  bool valid = true;
  std::vector<WitnessReason> reasons;
};

/// Pure structural check of a witness against the host adjacency. Never
/// throws; failures are reported as machine-readable reason codes.
WitnessReport validate_witness(const HostGraph& g, const PatternGraph& pattern,
                               const SubdivisionWitness& w);

struct Packing {
  std::vector<SubdivisionWitness> witnesses;
  std::vector<Vertex> covered;  // sorted union of witness vertex sets
  double coverage_fraction = 0.0;

  void recompute_coverage(Vertex host_n);
};

enum class PackingReason {
  witness_invalid,
  witness_overlap,
};

struct PackingReport {
  bool valid = true;
  double coverage = 0.0;
  std::vector<std::pair<PackingReason, int>> reasons;  // reason + witness index
  std::vector<WitnessReport> witness_reports;
};

PackingReport validate_packing(const HostGraph& g, const PatternGraph& pattern,
                               const Packing& p);

}  // namespace tfpack
