#pragma once

#include <cstdint>
#include <vector>

#include "tfpack/host_graph.hpp"

namespace tfpack {

/// Vertex-disjoint paths of exactly m vertices covering most of G[V], with
/// every host vertex having at most 4d/m neighbors among path endvertices.
struct PathCover {
  std::vector<std::vector<Vertex>> paths;  // each of exactly m vertices
  int m = 0;
  std::vector<Vertex> endvertices;  // sorted union of path endpoints
  int64_t covered = 0;              // vertices on kept paths
  int discarded_fragments = 0;      // union components that fell short of m vertices
  int trimmed_paths = 0;            // full paths dropped to restore the endvertex bound
  int shortfall = 0;                // max(0, target t - kept), target = ceil((1-eps)|V|/m)
  bool partition_degraded = false;  // class partition fell back to lower-bounds-only
  int partition_rounds = 0;
};

/// Partition V into m classes, take a maximum matching between consecutive
/// classes, and keep the components of the union that traverse all classes.
/// On class-partition exhaustion, retries without the upper degree bounds and
/// records the degradation instead of failing (a genuine second exhaustion
/// propagates).
PathCover build_path_cover(const HostGraph& g, const std::vector<Vertex>& v_set, int m, double d,
                           double gamma, double epsilon, uint64_t seed);

/// Components of M_1 ∪ ... ∪ M_{m-1} that are full paths through all classes,
/// one vertex per class in order, plus the count of shorter fragments.
std::pair<std::vector<std::vector<Vertex>>, int> assemble_paths(
    const std::vector<std::vector<Edge>>& matchings,
    const std::vector<std::vector<Vertex>>& classes, Vertex host_n);

}  // namespace tfpack
