#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tfpack/host_graph.hpp"

namespace tfpack {

enum class ResampleMode {
  targeted,   // re-randomize only vertices participating in violated constraints
  rejection,  // plain independent redraw of the whole assignment each round
};

/// Partition A into m classes with prescribed proportions so that every
/// tracked vertex has near-proportional degree into each class:
///   B1: deg(v, A_i) >= (1-2*gamma) * p_i * d            for v in track
///   B2: |A_i| = (1 +- gamma) * p_i * |A|
///   B3: deg(v, A_i) <= (1+2*gamma) * p_i * d            when upper_bound_mode
struct PartitionRequest {
  std::vector<Vertex> target;      // the set A
  std::vector<Vertex> track;       // vertices whose class-degrees are constrained
  std::vector<double> proportions; // p_1..p_m, positive, summing to 1
  double gamma = 0.5;              // in [0, 1/2]
  double d_ref = 0.0;              // reference degree d
  bool upper_bound_mode = false;
  ResampleMode mode = ResampleMode::targeted;
  int budget = 1000;               // global resample rounds
};

struct PartitionResult {
  std::vector<std::vector<Vertex>> classes;  // disjoint, union = A, each sorted
  int resample_rounds = 0;
  /// Smallest tolerance for which the returned assignment satisfies the
  /// requested properties; at most the requested gamma on success.
  double achieved_slack = 0.0;
};

PartitionResult partition(const HostGraph& g, const PartitionRequest& req, uint64_t seed);

struct SplitResult {
  std::vector<Vertex> v_side;  // the large side V
  std::vector<Vertex> w_side;  // the small side W
  int resample_rounds = 0;
  double achieved_slack = 0.0;
};

/// V(G) = V ∪ W with every vertex keeping near-proportional degree into both
/// sides; thin wrapper over partition() with m=2, proportions (1-p, p) and
/// upper bounds enforced. d_ref < 0 means "use the observed average degree".
SplitResult split_V_W(const HostGraph& g, double p, double gamma, uint64_t seed,
                      double d_ref = -1.0, ResampleMode mode = ResampleMode::targeted);

/// Subsample U' ⊆ A of expected fraction p1 such that every anchor keeps a
/// proportional share of its neighbors in U'. d_ref is the caller's reference
/// degree for the anchors' degree into A (precondition: >= (1-gamma)*d_ref).
std::vector<Vertex> sample_subset(const HostGraph& g, const std::vector<Vertex>& anchors,
                                  const std::vector<Vertex>& source, double p1, double gamma,
                                  double d_ref, uint64_t seed,
                                  ResampleMode mode = ResampleMode::targeted);

}  // namespace tfpack
