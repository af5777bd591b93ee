#pragma once

#include <cstdint>
#include <vector>

#include "tfpack/witness.hpp"

namespace tfpack {

enum class FinderStrategy { exhaustive, dense_greedy, auto_pick };

struct FinderBudget {
  int64_t node_budget = 1'000'000;
  FinderStrategy strategy = FinderStrategy::auto_pick;
};

enum class FindStatus {
  found,
  absent,   // certified: exhaustive search completed within budget
  unknown,  // heuristic gave up or the budget ran out
};

struct FindResult {
  FindStatus status = FindStatus::unknown;
  SubdivisionWitness witness;
  int64_t nodes_used = 0;
};

/// Search for a subdivision of the pattern core in g. The pattern must have
/// no isolated vertices. dense_greedy places branch vertices highest-degree
/// first and routes subdivision-paths by shortest path in the residual graph,
/// backtracking over branch choices; exhaustive additionally backtracks over
/// whole path systems and certifies absence when it completes.
FindResult find_subdivision(const HostGraph& g, const PatternGraph& pattern, FinderBudget budget);

/// Deterministic witness inside a complete bipartite graph: branch vertices
/// in part_x, each pattern edge routed through a private vertex of part_y.
/// Both parts must have at least |core|^2 vertices.
SubdivisionWitness find_in_complete_bipartite(const HostGraph& g, const std::vector<Vertex>& part_x,
                                              const std::vector<Vertex>& part_y,
                                              const PatternGraph& pattern);

/// True iff the average degree of g is at least the threshold.
bool mader_threshold_check(const HostGraph& g, double threshold);

}  // namespace tfpack
