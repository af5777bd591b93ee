#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tfpack/host_graph.hpp"
#include "tfpack/path_cover.hpp"
#include "tfpack/subdivision_finder.hpp"
#include "tfpack/witness.hpp"

namespace tfpack {

struct PackerConfig {
  double p = 0.12;        // W fraction
  int m = 8;              // vertices per cover path
  double gamma = 0.5;     // partition tolerance
  double epsilon = 0.15;  // cover slack / U' sizing
  double u_prime_fraction = 0.0;  // 0 means the epsilon/(2p) default
  FinderBudget finder;
  uint64_t seed = 0;
  int max_outer_rounds = 100000;
  double eta = 0.1;  // coverage slack target for the theorem driver

  double effective_u_prime() const {
    double p1 = u_prime_fraction > 0.0 ? u_prime_fraction : epsilon / (2.0 * p);
    return p1 > 1.0 ? 1.0 : p1;
  }
  void validate() const;
};

/// Auxiliary graph L on a sample U' of uncovered W-vertices. Each edge stands
/// for one unused cover path: the stored label is the path index, and the
/// orientation tells which endpoint attaches to the path's x-end.
struct AuxiliaryGraph {
  HostGraph graph;                    // compact ids 0..|U'|-1
  std::vector<Vertex> local_to_host;  // sorted U'
  struct EdgeLabel {
    int path_index;
    bool u_attaches_x;  // the smaller endpoint attaches to x_{f(e)}
  };
  std::map<Edge, EdgeLabel> labels;  // keyed by local (u,v), u < v

  /// No admissible (edge, label) extension exists.
  bool is_maximal(const HostGraph& g, const std::vector<int>& unused_paths,
                  const std::vector<std::vector<Vertex>>& paths) const;
};

/// Greedy-maximal auxiliary graph: paths in ascending index order, candidate
/// endpoint pairs in lexicographic order, first admissible pair wins.
AuxiliaryGraph build_aux(const HostGraph& g, const std::vector<Vertex>& u_prime,
                         const std::vector<int>& unused_paths,
                         const std::vector<std::vector<Vertex>>& paths);

/// Replace each auxiliary edge by (endpoint, whole cover path, endpoint) and
/// concatenate along the witness's subdivision-paths in L.
SubdivisionWitness expand_witness(const SubdivisionWitness& in_aux, const AuxiliaryGraph& aux,
                                  const std::vector<std::vector<Vertex>>& paths);

struct PackStats {
  int rounds = 0;
  int insertions = 0;
  int endgame_insertions = 0;
  int stalled_rounds = 0;
  int j_final = 0;
  double aux_density_mean = 0.0;  // mean e(L)/|U'| over rounds
  int split_rounds = 0;
  bool split_degraded = false;
  bool cover_degraded = false;
  int cover_fragments = 0;
  int cover_trimmed = 0;
  int cover_shortfall = 0;
  bool accounting_ok = true;  // |W \ U| == sum of witness W-intersections, every round
};

struct PackResult {
  Packing packing;   // the vertex-disjoint family, host ids of the packed graph
  PathCover cover;   // the underlying path cover (for C1 audits)
  std::vector<Vertex> v_side;
  std::vector<Vertex> w_side;
  PackStats stats;
};

/// Core packing loop on a near-regular graph with an isolated-vertex-free
/// pattern. d_ref < 0 means "use the observed average degree".
PackResult pack_core(const HostGraph& g, const PatternGraph& pattern, const PackerConfig& cfg,
                     double d_ref = -1.0);

struct PackFullResult {
  Packing packing;      // subdivisions of the full pattern F, in host ids
  PackResult core;      // the underlying core run (remapped to host ids)
  int kept = 0;         // witnesses kept by the prefix rule
  int dropped = 0;      // trimmed by the prefix rule or the iso-vertex pool
  bool target_met = false;  // coverage reached (1-eta)n
};

/// Theorem driver: reserve a set S, pack the isolated-free core of F on G-S,
/// keep the prefix of largest witnesses selected by the z_j rule, and attach
/// |F|-|H| spare vertices to each kept witness.
PackFullResult pack_full(const HostGraph& g, const PatternGraph& f, const PackerConfig& cfg,
                         double d_ref = -1.0);

/// Prefix selection: z_j = sum_{i<=j} (sizes[i] + iso_gap); returns the kept
/// count under "minimal z_l >= (1-eta)*n, fall back while z_l > n".
int select_prefix(const std::vector<int64_t>& sizes_desc, int iso_gap, int64_t n, double eta);

}  // namespace tfpack
