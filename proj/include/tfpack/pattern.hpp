#pragma once

#include <vector>

#include "tfpack/host_graph.hpp"

namespace tfpack {

/// The fixed pattern graph F together with its isolated-vertex-free core H.
/// Core vertices are re-indexed densely; core_to_f maps them back to F ids.
class PatternGraph {
 public:
  PatternGraph() = default;
  explicit PatternGraph(HostGraph f);

  const HostGraph& full() const { return f_; }
  const HostGraph& core() const { return core_; }
  int isolated_count() const { return isolated_count_; }
  const std::vector<Vertex>& core_to_f() const { return core_to_f_; }

  int size() const { return f_.vertex_count(); }
  int core_size() const { return core_.vertex_count(); }

 private:
  HostGraph f_;
  HostGraph core_;
  std::vector<Vertex> core_to_f_;
  int isolated_count_ = 0;
};

}  // namespace tfpack
