#pragma once

#include <stdexcept>
#include <string>

namespace tfpack {

enum class Errc {
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  infeasible_degree_sequence,
  generation_timeout,
  invalid_degree,
  unknown_name,
  precondition_degree,
  resample_budget_exhausted,
  partition_failed,
  budget_exhausted,
  parts_too_small,
  limits_exceeded,
  label_missing,
  pipeline_stage_failed,
  io_error,
  config_error,
};

const char* errc_name(Errc c);

/// Library-wide exception; carries a machine-readable code plus context text.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace tfpack
