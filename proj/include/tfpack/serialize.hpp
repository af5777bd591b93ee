#pragma once

#include <iosfwd>
#include <string>

#include "tfpack/host_graph.hpp"
#include "tfpack/pattern.hpp"
#include "tfpack/witness.hpp"

namespace tfpack {

/// Edge-list text format: first line "n m", then m lines "u v" (0-based,
/// whitespace separated, LF endings, canonical edge order on write).
HostGraph read_edge_list(std::istream& in, const std::string& origin = "<stream>");
HostGraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const HostGraph& g);
void write_edge_list_file(const std::string& path, const HostGraph& g);

/// Packing document: pattern (full F) plus per-witness branch_map,
/// subdiv_paths (aligned with the core's canonical edge order) and
/// iso_vertices. Stable key order and fixed indentation, so identical
/// packings serialize byte-identically.
std::string packing_to_json(const HostGraph& g, const PatternGraph& pattern, const Packing& p);
std::string witness_to_json(const PatternGraph& pattern, const SubdivisionWitness& w);

struct LoadedPacking {
  PatternGraph pattern;
  Packing packing;
  Vertex host_n = 0;
};
LoadedPacking packing_from_json(const std::string& text);

}  // namespace tfpack
