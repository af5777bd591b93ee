#include "tfpack/generators.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "tfpack/errors.hpp"
#include "tfpack/rng.hpp"

namespace tfpack {

namespace {

bool pairing_is_simple(const std::vector<Vertex>& stubs, std::set<Edge>& seen) {
  seen.clear();
  for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
    Vertex u = stubs[i], v = stubs[i + 1];
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) return false;
  }
  return true;
}

}  // namespace

HostGraph gen_random_regular(Vertex n, int d, uint64_t seed) {
  if (d < 0 || d >= n || (static_cast<int64_t>(n) * d) % 2 != 0)
    throw Error(Errc::infeasible_degree_sequence,
                "n=" + std::to_string(n) + " d=" + std::to_string(d));
  if (d == 0) return build_graph(n, {});

  Rng rng(seed);
  std::vector<Vertex> stubs;
  stubs.reserve(static_cast<size_t>(n) * static_cast<size_t>(d));
  for (Vertex v = 0; v < n; ++v)
    for (int k = 0; k < d; ++k) stubs.push_back(v);

  // Rejection phase: budget of 100*n*d half-edge pairings in total.
  const int64_t pair_budget = 100LL * n * d;
  const int64_t pairs_per_attempt = static_cast<int64_t>(stubs.size()) / 2;
  int64_t attempts = std::max<int64_t>(1, pair_budget / std::max<int64_t>(1, pairs_per_attempt));
  std::set<Edge> seen;
  for (int64_t a = 0; a < attempts; ++a) {
    rng.shuffle(stubs);
    if (pairing_is_simple(stubs, seen)) {
      std::vector<Edge> edges;
      edges.reserve(static_cast<size_t>(pairs_per_attempt));
      for (size_t i = 0; i + 1 < stubs.size(); i += 2) edges.emplace_back(stubs[i], stubs[i + 1]);
      return build_graph(n, edges);
    }
  }

  // Repair phase: fix loops/multi-edges of the last pairing by double-edge
  // swaps against randomly chosen partner pairs.
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<size_t>(pairs_per_attempt));
  for (size_t i = 0; i + 1 < stubs.size(); i += 2) pairs.emplace_back(stubs[i], stubs[i + 1]);

  auto key = [](Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; };
  std::map<Edge, int> multiplicity;
  for (auto [a, b] : pairs)
    if (a != b) ++multiplicity[key(a, b)];
  auto defective = [&](size_t i) {
    auto [a, b] = pairs[i];
    return a == b || multiplicity[key(a, b)] > 1;
  };

  const int64_t swap_budget = 200LL * n * d + 10000;
  int64_t steps = 0;
  for (;;) {
    std::vector<size_t> bad;
    for (size_t i = 0; i < pairs.size(); ++i)
      if (defective(i)) bad.push_back(i);
    if (bad.empty()) break;
    for (size_t i : bad) {
      if (++steps > swap_budget)
        throw Error(Errc::generation_timeout, "n=" + std::to_string(n) + " d=" + std::to_string(d));
      size_t j = static_cast<size_t>(rng.uniform_index(pairs.size()));
      if (j == i) continue;
      auto [a, b] = pairs[i];
      auto [c, e] = pairs[j];
      // Swap to (a,c) and (b,e); accept only if both results are new simple edges.
      if (a == c || b == e) continue;
      if (multiplicity[key(a, c)] > 0 || multiplicity[key(b, e)] > 0) continue;
      if (a != b) --multiplicity[key(a, b)];
      if (c != e) --multiplicity[key(c, e)];
      ++multiplicity[key(a, c)];
      ++multiplicity[key(b, e)];
      pairs[i] = {a, c};
      pairs[j] = {b, e};
    }
  }
  return build_graph(n, pairs);
}

GadgetResult gen_lower_bound_gadget(int d, GadgetBlockMode mode) {
  if (d < 4 || d % 2 != 0) throw Error(Errc::invalid_degree, "d=" + std::to_string(d) + " (need even d >= 4)");

  const int block = d + 2;
  const Vertex n = static_cast<Vertex>(d * block + 2);
  std::vector<Edge> edges;

  for (int copy = 0; copy < d; ++copy) {
    const Vertex base = static_cast<Vertex>(copy * block);
    std::set<Edge> block_edges;
    for (int a = 0; a < block; ++a)
      for (int b = a + 1; b < block; ++b) block_edges.insert({base + a, base + b});
    if (mode == GadgetBlockMode::perfect_matching) {
      for (int a = 0; a < block; a += 2) block_edges.erase({base + a, base + a + 1});
    } else {
      for (int a = 0; a < block; ++a) {
        Vertex u = base + a, v = base + (a + 1) % block;
        block_edges.erase(u < v ? Edge{u, v} : Edge{v, u});
      }
    }
    // Canonical x,y,z: lowest ids with xy, yz present and xz absent.
    auto present = [&](Vertex a, Vertex b) {
      return block_edges.count(a < b ? Edge{a, b} : Edge{b, a}) > 0;
    };
    bool done = false;
    for (int x = 0; x < block && !done; ++x)
      for (int y = 0; y < block && !done; ++y) {
        if (y == x || !present(base + x, base + y)) continue;
        for (int z = 0; z < block && !done; ++z) {
          if (z == x || z == y) continue;
          if (present(base + y, base + z) && !present(base + x, base + z)) {
            Vertex vx = base + x, vy = base + y, vz = base + z;
            block_edges.erase(vx < vy ? Edge{vx, vy} : Edge{vy, vx});
            block_edges.erase(vy < vz ? Edge{vy, vz} : Edge{vz, vy});
            block_edges.insert(vx < vz ? Edge{vx, vz} : Edge{vz, vx});
            done = true;
          }
        }
      }
    if (!done) throw Error(Errc::invalid_degree, "block construction inconsistent for d=" + std::to_string(d));
    edges.insert(edges.end(), block_edges.begin(), block_edges.end());
  }

  // y in each block is the vertex whose degree dropped to d-2; with the
  // canonical choice above that is local vertex 2.
  GadgetResult out;
  out.u = static_cast<Vertex>(d * block);
  out.v = static_cast<Vertex>(d * block + 1);
  for (int copy = 0; copy < d; ++copy) {
    Vertex y = static_cast<Vertex>(copy * block + 2);
    edges.emplace_back(out.u, y);
    edges.emplace_back(out.v, y);
  }
  out.graph = build_graph(n, edges);
  return out;
}

namespace {

HostGraph complete_graph(int t) {
  std::vector<Edge> edges;
  for (int a = 0; a < t; ++a)
    for (int b = a + 1; b < t; ++b) edges.emplace_back(a, b);
  return build_graph(t, edges);
}

HostGraph cycle_graph(int k) {
  if (k < 3) throw Error(Errc::unknown_name, "cycle needs >= 3 vertices");
  std::vector<Edge> edges;
  for (int a = 0; a < k; ++a) edges.emplace_back(a, (a + 1) % k);
  return build_graph(k, edges);
}

HostGraph path_graph(int k) {
  std::vector<Edge> edges;
  for (int a = 0; a + 1 < k; ++a) edges.emplace_back(a, a + 1);
  return build_graph(k, edges);
}

HostGraph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return build_graph(a + b, edges);
}

HostGraph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return build_graph(10, edges);
}

HostGraph add_isolated(HostGraph g) {
  return build_graph(g.vertex_count() + 1, g.edges());
}

}  // namespace

HostGraph gen_named(const std::string& id) {
  if (id.empty()) throw Error(Errc::unknown_name, "(empty)");
  if (id == "petersen" || id == "Petersen") return petersen();
  if (id == "K4-e") {
    return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  }
  if (id.size() > 2 && id.ends_with("+v")) return add_isolated(gen_named(id.substr(0, id.size() - 2)));

  char kind = id[0];
  std::string rest = id.substr(1);
  auto all_digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); });
  };
  if (kind == 'K') {
    auto comma = rest.find(',');
    if (comma != std::string::npos) {
      std::string a = rest.substr(0, comma), b = rest.substr(comma + 1);
      if (all_digits(a) && all_digits(b)) return complete_bipartite(std::stoi(a), std::stoi(b));
    } else if (rest.size() == 2 && all_digits(rest) && rest[0] > '0' && rest[1] > '0') {
      // Two nonzero single digits read as complete bipartite: K33 = K_{3,3}.
      return complete_bipartite(rest[0] - '0', rest[1] - '0');
    } else if (all_digits(rest)) {
      return complete_graph(std::stoi(rest));
    }
  } else if (kind == 'C' && all_digits(rest)) {
    return cycle_graph(std::stoi(rest));
  } else if (kind == 'P' && all_digits(rest)) {
    return path_graph(std::stoi(rest));
  }
  throw Error(Errc::unknown_name, id);
}

}  // namespace tfpack
