#include "tfpack/errors.hpp"

namespace tfpack {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::self_loop: return "SelfLoop";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::infeasible_degree_sequence: return "InfeasibleDegreeSequence";
    case Errc::generation_timeout: return "GenerationTimeout";
    case Errc::invalid_degree: return "InvalidDegree";
    case Errc::unknown_name: return "UnknownName";
    case Errc::precondition_degree: return "PreconditionDegree";
    case Errc::resample_budget_exhausted: return "ResampleBudgetExhausted";
    case Errc::partition_failed: return "PartitionFailed";
    case Errc::budget_exhausted: return "BudgetExhausted";
    case Errc::parts_too_small: return "PartsTooSmall";
    case Errc::limits_exceeded: return "LimitsExceeded";
    case Errc::label_missing: return "LabelMissing";
    case Errc::pipeline_stage_failed: return "PipelineStageFailed";
    case Errc::io_error: return "IoError";
    case Errc::config_error: return "ConfigError";
  }
  return "?";
}

}  // namespace tfpack
