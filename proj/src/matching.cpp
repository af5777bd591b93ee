#include "tfpack/matching.hpp"

#include <limits>
#include <queue>

namespace tfpack {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
  const std::vector<std::vector<int>>& adj;  // left index -> right indices
  int nl, nr;
  std::vector<int> match_l, match_r, dist;

  HopcroftKarp(const std::vector<std::vector<int>>& adj_, int nl_, int nr_)
      : adj(adj_), nl(nl_), nr(nr_), match_l(nl_, -1), match_r(nr_, -1), dist(nl_) {}

  bool bfs() {
    std::queue<int> q;
    for (int u = 0; u < nl; ++u) {
      if (match_l[u] < 0) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool reachable = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        int w = match_r[v];
        if (w < 0) {
          reachable = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable;
  }

  bool dfs(int u) {
    for (int v : adj[u]) {
      int w = match_r[v];
      if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  }

  void run() {
    while (bfs()) {
      for (int u = 0; u < nl; ++u)
        if (match_l[u] < 0) dfs(u);
    }
  }
};

}  // namespace

std::vector<Edge> max_bipartite_matching(const HostGraph& g, const std::vector<Vertex>& left,
                                         const std::vector<Vertex>& right) {
  std::vector<int> right_index(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t j = 0; j < right.size(); ++j) right_index[static_cast<size_t>(right[j])] = static_cast<int>(j);
  std::vector<std::vector<int>> adj(left.size());
  for (size_t i = 0; i < left.size(); ++i)
    for (Vertex u : g.neighbors(left[i])) {
      int j = right_index[static_cast<size_t>(u)];
      if (j >= 0) adj[i].push_back(j);
    }
  HopcroftKarp hk(adj, static_cast<int>(left.size()), static_cast<int>(right.size()));
  hk.run();
  std::vector<Edge> out;
  for (int u = 0; u < hk.nl; ++u)
    if (hk.match_l[u] >= 0)
      out.emplace_back(left[static_cast<size_t>(u)], right[static_cast<size_t>(hk.match_l[u])]);
  return out;
}

}  // namespace tfpack
