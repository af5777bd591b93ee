#include "tfpack/host_graph.hpp"

#include <algorithm>

#include "tfpack/errors.hpp"

namespace tfpack {

HostGraph build_graph(Vertex n, const std::vector<Edge>& edge_list) {
  if (n < 0) throw Error(Errc::vertex_out_of_range, "negative vertex count");
  HostGraph g;
  g.n_ = n;
  g.edges_.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(Errc::vertex_out_of_range,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw Error(Errc::self_loop, "vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    g.edges_.emplace_back(u, v);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    throw Error(Errc::duplicate_edge,
                "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
  g.adjacency_.assign(static_cast<size_t>(n), {});
  for (auto [u, v] : g.edges_) {
    g.adjacency_[static_cast<size_t>(u)].push_back(v);
    g.adjacency_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

bool HostGraph::has_edge(Vertex u, Vertex v) const {
  if (!in_range(u) || !in_range(v)) return false;
  const auto& a = adjacency_[static_cast<size_t>(u)];
  const auto& b = adjacency_[static_cast<size_t>(v)];
  const auto& smaller = a.size() <= b.size() ? a : b;
  Vertex target = a.size() <= b.size() ? v : u;
  return std::binary_search(smaller.begin(), smaller.end(), target);
}

int HostGraph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

int HostGraph::degree_into(Vertex v, const std::vector<char>& mask) const {
  int count = 0;
  for (Vertex u : neighbors(v))
    if (mask[static_cast<size_t>(u)]) ++count;
  return count;
}

bool HostGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<size_t>(n_), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : neighbors(v)) {
      if (!seen[static_cast<size_t>(u)]) {
        seen[static_cast<size_t>(u)] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n_;
}

std::pair<HostGraph, std::vector<Vertex>> induced_subgraph(const HostGraph& g,
                                                           std::vector<Vertex> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Vertex> to_new(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < keep.size(); ++i) to_new[static_cast<size_t>(keep[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    Vertex nu = to_new[static_cast<size_t>(u)];
    Vertex nv = to_new[static_cast<size_t>(v)];
    if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
  }
  return {build_graph(static_cast<Vertex>(keep.size()), edges), keep};
}

}  // namespace tfpack
