#include "tfpack/partitioner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "tfpack/errors.hpp"
#include "tfpack/rng.hpp"

namespace tfpack {

namespace {

struct Assignment {
  // class_of[k] indexes into classes for the k-th vertex of A (A sorted order).
  std::vector<int> class_of;
  std::vector<std::vector<int>> members;  // per class: indices into A
  std::vector<int> pos_in_class;          // position of k inside its class list

  void place(int k, int c) {
    class_of[k] = c;
    pos_in_class[k] = static_cast<int>(members[c].size());
    members[c].push_back(k);
  }

  void move(int k, int c_new) {
    int c_old = class_of[k];
    if (c_old == c_new) return;
    int p = pos_in_class[k];
    int last = members[c_old].back();
    members[c_old][p] = last;
    pos_in_class[last] = p;
    members[c_old].pop_back();
    place(k, c_new);
  }
};

// Largest-remainder apportionment of |A| slots to proportions.
std::vector<int> apportion(int total, const std::vector<double>& p) {
  const int m = static_cast<int>(p.size());
  std::vector<int> counts(m);
  std::vector<std::pair<double, int>> rema(m);
  int assigned = 0;
  for (int i = 0; i < m; ++i) {
    double exact = p[i] * total;
    counts[i] = static_cast<int>(std::floor(exact));
    assigned += counts[i];
    rema[i] = {exact - counts[i], i};
  }
  std::sort(rema.begin(), rema.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (int k = 0; k < total - assigned; ++k) ++counts[rema[static_cast<size_t>(k)].second];
  return counts;
}

int draw_class(Rng& rng, const std::vector<double>& p) {
  double x = rng.uniform01();
  double acc = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    if (x < acc) return static_cast<int>(i);
  }
  return static_cast<int>(p.size()) - 1;
}

struct Violation {
  enum Kind { b1_low, b3_high, b2_size } kind;
  Vertex vertex;  // -1 for size violations
  int cls;
  double observed;
  double bound;
};

}  // namespace

PartitionResult partition(const HostGraph& g, const PartitionRequest& req, uint64_t seed) {
  const int m = static_cast<int>(req.proportions.size());
  if (m == 0) throw Error(Errc::config_error, "no proportions");
  double sum = std::accumulate(req.proportions.begin(), req.proportions.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-12) throw Error(Errc::config_error, "proportions sum to " + std::to_string(sum));
  for (double p : req.proportions)
    if (p <= 0.0) throw Error(Errc::config_error, "non-positive proportion");
  if (req.gamma < 0.0 || req.gamma > 0.5)
    throw Error(Errc::config_error, "gamma=" + std::to_string(req.gamma) + " outside [0, 1/2]");

  std::vector<Vertex> A(req.target);
  std::sort(A.begin(), A.end());
  A.erase(std::unique(A.begin(), A.end()), A.end());
  const int asize = static_cast<int>(A.size());

  std::vector<int> a_index(static_cast<size_t>(g.vertex_count()), -1);
  for (int k = 0; k < asize; ++k) a_index[static_cast<size_t>(A[static_cast<size_t>(k)])] = k;

  std::vector<Vertex> track(req.track);
  std::sort(track.begin(), track.end());
  track.erase(std::unique(track.begin(), track.end()), track.end());

  const double gamma = req.gamma;
  const double d = req.d_ref;

  // Lemma precondition: tracked vertices see nearly d neighbors inside A.
  for (Vertex v : track) {
    int into_a = 0;
    for (Vertex u : g.neighbors(v))
      if (a_index[static_cast<size_t>(u)] >= 0) ++into_a;
    if (into_a < (1.0 - gamma) * d - 1e-9)
      throw Error(Errc::precondition_degree,
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(into_a) +
                      " into A, needs >= " + std::to_string((1.0 - gamma) * d));
    if (req.upper_bound_mode && into_a > (1.0 + gamma) * d + 1e-9)
      throw Error(Errc::precondition_degree,
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(into_a) +
                      " into A, needs <= " + std::to_string((1.0 + gamma) * d));
  }

  Rng rng(seed);
  Assignment asg;
  asg.class_of.assign(static_cast<size_t>(asize), -1);
  asg.pos_in_class.assign(static_cast<size_t>(asize), -1);
  asg.members.assign(static_cast<size_t>(m), {});

  auto init_stratified = [&] {
    for (auto& c : asg.members) c.clear();
    std::vector<int> labels;
    labels.reserve(static_cast<size_t>(asize));
    auto counts = apportion(asize, req.proportions);
    for (int c = 0; c < m; ++c) labels.insert(labels.end(), static_cast<size_t>(counts[static_cast<size_t>(c)]), c);
    rng.shuffle(labels);
    for (int k = 0; k < asize; ++k) asg.place(k, labels[static_cast<size_t>(k)]);
  };
  auto init_independent = [&] {
    for (auto& c : asg.members) c.clear();
    for (int k = 0; k < asize; ++k) asg.place(k, draw_class(rng, req.proportions));
  };

  if (req.mode == ResampleMode::targeted)
    init_stratified();
  else
    init_independent();

  // deg_into[t][c] = neighbors of track[t] currently assigned to class c.
  std::vector<int> track_index(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t t = 0; t < track.size(); ++t) track_index[static_cast<size_t>(track[t])] = static_cast<int>(t);
  std::vector<std::vector<int>> deg_into(track.size(), std::vector<int>(static_cast<size_t>(m), 0));

  auto recount = [&] {
    for (auto& row : deg_into) std::fill(row.begin(), row.end(), 0);
    for (size_t t = 0; t < track.size(); ++t)
      for (Vertex u : g.neighbors(track[t])) {
        int k = a_index[static_cast<size_t>(u)];
        if (k >= 0) ++deg_into[t][static_cast<size_t>(asg.class_of[static_cast<size_t>(k)])];
      }
  };
  recount();

  auto apply_move = [&](int k, int c_new) {
    int c_old = asg.class_of[static_cast<size_t>(k)];
    if (c_old == c_new) return;
    for (Vertex x : g.neighbors(A[static_cast<size_t>(k)])) {
      int t = track_index[static_cast<size_t>(x)];
      if (t >= 0) {
        --deg_into[static_cast<size_t>(t)][static_cast<size_t>(c_old)];
        ++deg_into[static_cast<size_t>(t)][static_cast<size_t>(c_new)];
      }
    }
    asg.move(k, c_new);
  };

  auto b1_bound = [&](int c) { return (1.0 - 2.0 * gamma) * req.proportions[static_cast<size_t>(c)] * d; };
  auto b3_bound = [&](int c) { return (1.0 + 2.0 * gamma) * req.proportions[static_cast<size_t>(c)] * d; };

  auto collect_violations = [&](std::vector<Violation>& out) {
    out.clear();
    for (int c = 0; c < m; ++c) {
      double target = req.proportions[static_cast<size_t>(c)] * asize;
      double size = static_cast<double>(asg.members[static_cast<size_t>(c)].size());
      if (size < (1.0 - gamma) * target - 1e-9 || size > (1.0 + gamma) * target + 1e-9)
        out.push_back({Violation::b2_size, -1, c, size, target});
    }
    for (size_t t = 0; t < track.size(); ++t) {
      for (int c = 0; c < m; ++c) {
        int degc = deg_into[t][static_cast<size_t>(c)];
        if (degc < b1_bound(c) - 1e-9)
          out.push_back({Violation::b1_low, track[t], c, static_cast<double>(degc), b1_bound(c)});
        else if (req.upper_bound_mode && degc > b3_bound(c) + 1e-9)
          out.push_back({Violation::b3_high, track[t], c, static_cast<double>(degc), b3_bound(c)});
      }
    }
  };

  // Swap-based repair keeps class sizes fixed while re-randomizing vertices
  // that participate in a violated constraint.
  auto pick_swap_partner = [&](int dest_cls, Vertex avoid_neighbor_of) -> int {
    const auto& pool = asg.members[static_cast<size_t>(dest_cls)];
    if (pool.empty()) return -1;
    for (int tries = 0; tries < 8; ++tries) {
      int k = pool[static_cast<size_t>(rng.uniform_index(pool.size()))];
      if (avoid_neighbor_of < 0 || !g.has_edge(A[static_cast<size_t>(k)], avoid_neighbor_of)) return k;
    }
    return pool[static_cast<size_t>(rng.uniform_index(pool.size()))];
  };

  auto repair = [&](const Violation& viol) {
    if (viol.kind == Violation::b2_size) return;  // sizes are fixed by construction
    int t = track_index[static_cast<size_t>(viol.vertex)];
    int c = viol.cls;
    if (viol.kind == Violation::b3_high) {
      int excess = deg_into[static_cast<size_t>(t)][static_cast<size_t>(c)] -
                   static_cast<int>(std::floor(b3_bound(c) + 1e-9));
      for (int r = 0; r < excess; ++r) {
        // Re-draw the class of one counted neighbor; swap to keep sizes.
        std::vector<int> in_class;
        for (Vertex u : g.neighbors(viol.vertex)) {
          int k = a_index[static_cast<size_t>(u)];
          if (k >= 0 && asg.class_of[static_cast<size_t>(k)] == c) in_class.push_back(k);
        }
        if (in_class.empty()) break;
        int w = in_class[static_cast<size_t>(rng.uniform_index(in_class.size()))];
        int dest = draw_class(rng, req.proportions);
        if (dest == c) continue;
        int partner = pick_swap_partner(dest, viol.vertex);
        if (partner < 0) continue;
        apply_move(w, dest);
        apply_move(partner, c);
      }
    } else {  // b1_low
      int deficit = static_cast<int>(std::ceil(b1_bound(c) - 1e-9)) -
                    deg_into[static_cast<size_t>(t)][static_cast<size_t>(c)];
      for (int r = 0; r < deficit; ++r) {
        std::vector<int> outside;
        for (Vertex u : g.neighbors(viol.vertex)) {
          int k = a_index[static_cast<size_t>(u)];
          if (k >= 0 && asg.class_of[static_cast<size_t>(k)] != c) outside.push_back(k);
        }
        if (outside.empty()) break;
        int w = outside[static_cast<size_t>(rng.uniform_index(outside.size()))];
        int src = asg.class_of[static_cast<size_t>(w)];
        int partner = pick_swap_partner(c, viol.vertex);
        if (partner < 0) continue;
        apply_move(w, c);
        apply_move(partner, src);
      }
    }
  };

  std::vector<Violation> violations;
  int rounds = 0;
  for (;;) {
    collect_violations(violations);
    if (violations.empty()) break;
    if (rounds >= req.budget) {
      std::ostringstream oss;
      oss << violations.size() << " violated constraints after " << rounds << " rounds;";
      for (size_t i = 0; i < violations.size() && i < 8; ++i) {
        const auto& v = violations[i];
        oss << " [" << (v.kind == Violation::b1_low ? "B1" : v.kind == Violation::b3_high ? "B3" : "B2")
            << " v=" << v.vertex << " class=" << v.cls << " obs=" << v.observed << " bound=" << v.bound << "]";
      }
      throw Error(Errc::resample_budget_exhausted, oss.str());
    }
    ++rounds;
    if (req.mode == ResampleMode::rejection) {
      init_independent();
      recount();
    } else {
      for (const auto& viol : violations) repair(viol);
    }
  }

  PartitionResult res;
  res.resample_rounds = rounds;
  res.classes.assign(static_cast<size_t>(m), {});
  for (int c = 0; c < m; ++c) {
    auto& cls = res.classes[static_cast<size_t>(c)];
    cls.reserve(asg.members[static_cast<size_t>(c)].size());
    for (int k : asg.members[static_cast<size_t>(c)]) cls.push_back(A[static_cast<size_t>(k)]);
    std::sort(cls.begin(), cls.end());
  }

  // achieved_slack: smallest gamma' for which this assignment satisfies the
  // requested properties (size deviations count directly, degree deviations
  // at half weight since their window is 2*gamma wide).
  double slack = 0.0;
  for (int c = 0; c < m; ++c) {
    double target = req.proportions[static_cast<size_t>(c)] * asize;
    if (target > 0)
      slack = std::max(slack, std::abs(static_cast<double>(res.classes[static_cast<size_t>(c)].size()) - target) / target);
  }
  for (size_t t = 0; t < track.size(); ++t) {
    for (int c = 0; c < m; ++c) {
      double expect = req.proportions[static_cast<size_t>(c)] * d;
      if (expect <= 0) continue;
      double degc = deg_into[t][static_cast<size_t>(c)];
      if (degc < expect) slack = std::max(slack, (expect - degc) / expect / 2.0);
      else if (req.upper_bound_mode) slack = std::max(slack, (degc - expect) / expect / 2.0);
    }
  }
  res.achieved_slack = slack;
  return res;
}

SplitResult split_V_W(const HostGraph& g, double p, double gamma, uint64_t seed, double d_ref,
                      ResampleMode mode) {
  if (p <= 0.0 || p >= 1.0) throw Error(Errc::config_error, "p=" + std::to_string(p));
  if (d_ref < 0) d_ref = g.average_degree();
  PartitionRequest req;
  req.target.resize(static_cast<size_t>(g.vertex_count()));
  std::iota(req.target.begin(), req.target.end(), 0);
  req.track = req.target;
  req.proportions = {1.0 - p, p};
  req.gamma = gamma;
  req.d_ref = d_ref;
  req.upper_bound_mode = true;
  req.mode = mode;
  auto res = partition(g, req, seed);
  SplitResult out;
  out.v_side = std::move(res.classes[0]);
  out.w_side = std::move(res.classes[1]);
  out.resample_rounds = res.resample_rounds;
  out.achieved_slack = res.achieved_slack;
  return out;
}

std::vector<Vertex> sample_subset(const HostGraph& g, const std::vector<Vertex>& anchors,
                                  const std::vector<Vertex>& source, double p1, double gamma,
                                  double d_ref, uint64_t seed, ResampleMode mode) {
  if (p1 <= 0.0 || p1 > 1.0) throw Error(Errc::config_error, "p1=" + std::to_string(p1));
  if (p1 == 1.0) {
    auto out = source;
    std::sort(out.begin(), out.end());
    return out;
  }
  PartitionRequest req;
  req.target = source;
  req.track = anchors;
  req.proportions = {p1, 1.0 - p1};
  req.gamma = gamma;
  req.d_ref = d_ref;
  req.upper_bound_mode = false;
  req.mode = mode;
  auto res = partition(g, req, seed);
  return std::move(res.classes[0]);
}

}  // namespace tfpack
