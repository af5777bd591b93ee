#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tfpack/packer.hpp"

namespace tfpack {

struct GenSpec {
  std::string kind;  // random_regular | gadget | named | file
  Vertex n = 0;
  int d = 0;
  uint64_t seed = 0;
  std::string named_id;
  std::string file;
};

HostGraph realize_instance(const GenSpec& spec);

/// Cross-audit of a core packing run: packing validity, the all-or-nothing
/// path rule (C1), the W-usage bound (C2) and the W\U accounting, all
/// recomputed from scratch against the carried cover and split.
struct AuditReport {
  bool packing_valid = false;
  bool c1_ok = false;
  bool c2_ok = false;
  bool accounting_ok = false;
  bool all_ok() const { return packing_valid && c1_ok && c2_ok && accounting_ok; }
};

AuditReport audit_core_result(const HostGraph& g, const PatternGraph& core_pattern,
                              const PackResult& res);

struct ExperimentSpec {
  std::vector<GenSpec> instances;
  std::string pattern_id = "C3";
  // Grid axes; the cell product is run `repetitions` times each.
  std::vector<double> p_values{0.12};
  std::vector<int> m_values{8};
  std::vector<double> epsilon_values{0.15};
  std::vector<double> gamma_values{0.5};
  std::vector<double> u_prime_values{0.0};
  std::vector<double> eta_values{0.1};
  int repetitions = 1;
  uint64_t seed_base = 1;
  int threads = 0;  // 0: TFPACK_THREADS env var, else hardware
};

ExperimentSpec experiment_spec_from_json(const std::string& text);

struct RunOutcome {
  // Identification
  int instance_index = 0;
  int cell_index = 0;
  int repetition = 0;
  Vertex n = 0;
  int d = 0;
  std::string pattern_id;
  PackerConfig config;
  // Results
  bool emitted = false;  // a packing was produced (pipeline did not fail)
  std::string error;     // pipeline failure text when !emitted
  double coverage = 0.0;
  int rounds = 0;
  int j_final = 0;
  double aux_density = 0.0;
  int witnesses = 0;
  int64_t wall_ms = 0;
  bool all_invariants_ok = false;
  bool degraded = false;  // any partition stage fell back to weaker bounds
  std::string packing_json;  // serialized (and re-validated) packing
};

/// One row per (instance, grid cell, repetition); every emitted packing is
/// re-validated from its serialized JSON before its row is marked ok.
std::vector<RunOutcome> run_experiment(const ExperimentSpec& spec);

/// CSV with the stable column set; wall_ms is the only nondeterministic column.
std::string outcomes_to_csv(const std::vector<RunOutcome>& outcomes);

struct CalibrationReport {
  int best_cell = -1;
  PackerConfig recommended;
  std::string report_json;  // per-cell means, exclusions, failures
};

/// Grid search: recommend the cell with the best mean coverage among cells
/// with zero invariant failures and zero partition exhaustions/degradations.
CalibrationReport calibrate(const ExperimentSpec& spec);

int default_thread_count();

}  // namespace tfpack
