#pragma once

#include <cstdint>
#include <string>

#include "tfpack/host_graph.hpp"

namespace tfpack {

/// Simple d-regular graph via the configuration model: pair half-edge stubs
/// uniformly, reject pairings with loops or multi-edges, and after the retry
/// budget fall back to double-edge-swap repair of the defects. Deterministic
/// in the seed; slight uniformity bias of the repair path is accepted.
HostGraph gen_random_regular(Vertex n, int d, uint64_t seed);

enum class GadgetBlockMode {
  perfect_matching,  // K_{d+2} minus a perfect matching (matches the stated degrees)
  hamilton_cycle,    // literal reading; the result is not d-regular
};

struct GadgetResult {
  HostGraph graph;
  Vertex u = -1;
  Vertex v = -1;
};

/// Lower-bound construction: d blocks, each K_{d+2} with a perfect matching
/// removed and the x,y,z edge swap applied, plus two apex vertices joined to
/// every block's low-degree vertex. d must be even and >= 4.
GadgetResult gen_lower_bound_gadget(int d, GadgetBlockMode mode = GadgetBlockMode::perfect_matching);

/// Named catalog: K<t>, C<k>, P<k>, two single digits K<a><b> (or K<a>,<b>)
/// for complete bipartite, "petersen", plus pattern ids "K4-e" and suffix
/// "+v" adding one isolated vertex.
HostGraph gen_named(const std::string& id);

}  // namespace tfpack
