#pragma once

#include <cstdint>
#include <vector>

#include "tfpack/witness.hpp"

namespace tfpack {

struct OracleLimits {
  int max_n = 12;
  int max_pattern_edges = 6;
  int64_t node_budget = 50'000'000;
};

/// Every minimal subdivision subgraph of the pattern in g, deduplicated by
/// its vertex+edge set. Independent of the finder: separate enumeration and
/// routing code, used to certify it.
std::vector<SubdivisionWitness> enumerate_subdivisions(const HostGraph& g,
                                                       const PatternGraph& pattern,
                                                       const OracleLimits& limits = {});

/// Existence only; same enumeration, stopping at the first complete witness.
bool exists_subdivision(const HostGraph& g, const PatternGraph& pattern,
                        const OracleLimits& limits = {});

struct OptimalPacking {
  Packing packing;
  bool certified = false;  // search tree exhausted within budget
  int64_t nodes_used = 0;
};

/// Exact maximum-coverage packing by branch-and-bound over the enumerated
/// witness list (conflicts are vertex overlaps).
OptimalPacking optimal_packing(const HostGraph& g, const PatternGraph& pattern,
                               const OracleLimits& limits = {});

/// All connected graphs on exactly n vertices, one per isomorphism class,
/// built by vertex augmentation with canonical-form deduplication.
std::vector<HostGraph> enumerate_connected_graphs(int n);

}  // namespace tfpack
