#include "tfpack/pattern.hpp"

namespace tfpack {

PatternGraph::PatternGraph(HostGraph f) : f_(std::move(f)) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < f_.vertex_count(); ++v)
    if (f_.degree(v) > 0) keep.push_back(v);
  isolated_count_ = f_.vertex_count() - static_cast<int>(keep.size());
  auto [core, back] = induced_subgraph(f_, keep);
  core_ = std::move(core);
  core_to_f_ = std::move(back);
}

}  // namespace tfpack
