#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tfpack {

using Vertex = int32_t;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

/// Immutable simple undirected graph on dense vertex ids 0..n-1.
/// Adjacency lists are sorted ascending and edges are kept in canonical
/// (u < v, lexicographic) order, so equal graphs compare equal byte for byte.
class HostGraph {
 public:
  HostGraph() = default;

  Vertex vertex_count() const { return n_; }
  int64_t edge_count() const { return static_cast<int64_t>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_[static_cast<size_t>(v)].data(), adjacency_[static_cast<size_t>(v)].size()};
  }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<size_t>(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool in_range(Vertex v) const { return v >= 0 && v < n_; }

  double average_degree() const {
    return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(edges_.size()) / static_cast<double>(n_);
  }
  int max_degree() const;

  /// Number of neighbors of v inside the set marked by `mask` (size n).
  int degree_into(Vertex v, const std::vector<char>& mask) const;

  bool is_connected() const;

  friend HostGraph build_graph(Vertex n, const std::vector<Edge>& edge_list);

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Canonicalizing constructor. Rejects self-loops, duplicate edges and
/// out-of-range ids; input order does not matter.
HostGraph build_graph(Vertex n, const std::vector<Edge>& edge_list);

/// Induced subgraph on `keep` (need not be sorted); second result maps the
/// new dense ids back to the original ones.
std::pair<HostGraph, std::vector<Vertex>> induced_subgraph(const HostGraph& g,
                                                           std::vector<Vertex> keep);

}  // namespace tfpack
