#pragma once

#include <vector>

#include "tfpack/host_graph.hpp"

namespace tfpack {

/// Maximum matching in the bipartite graph G[left, right] (Hopcroft-Karp).
/// Returns matched pairs as (left vertex, right vertex) in host ids,
/// deterministic for a fixed graph and side ordering.
std::vector<Edge> max_bipartite_matching(const HostGraph& g, const std::vector<Vertex>& left,
                                         const std::vector<Vertex>& right);

}  // namespace tfpack
