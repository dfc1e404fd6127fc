#pragma once

// Sweep engine: a spec describes a grid of (n, density) cells and a trial
// count; every record is a pure function of (spec, cell, trial), so sweeps
// are deterministic, trivially parallel over trials, resumable by cell, and
// byte-identical across thread counts.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "psat/cnf.hpp"
#include "psat/generator.hpp"
#include "psat/solver.hpp"

#include "json.hpp"

namespace psat {

enum class ExperimentKind : uint8_t {
  transition_sweep,
  sd_runtime,
  sd_uniformity,
  zero_flood,
  minima_geometry,
  structure_census,
  approx_gap,
  coupled_distance,
};

std::string to_string(ExperimentKind k);
ExperimentKind experiment_kind_from_string(const std::string &s);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::transition_sweep;
  std::vector<int32_t> n_grid;
  // exactly one density knob may be non-empty; sd_uniformity needs none
  std::vector<double> kappa_grid;
  std::vector<double> rho_grid;
  std::vector<int64_t> m_grid;
  SampleMode mode = SampleMode::planted;
  SolverKind solver = SolverKind::LS;
  int64_t trials = 1;
  uint64_t base_seed = 0;
  int32_t threads = 1;

  // < 0 draws the initial assignment uniformly from all 2^n tuples;
  // otherwise each variable is one independently with this probability
  double initial_one_fraction = -1.0;

  // zero_flood
  double q0 = 0.1;
  double q1 = 0.5;
  int64_t flood_batch = 1000;

  // sd_uniformity
  int32_t probe_m0 = 2;
  int64_t probe_t = 3;
  int64_t probe_trials = 200000;

  // structure_census
  int64_t isolation_d1 = 1;
  int64_t isolation_d2 = 1;

  // approx_gap: crown gadgets implanted on the top 9k variables per instance
  int64_t implant_crowns = 0;

  void validate() const;
  int64_t cells() const;
  int64_t total_records() const { return cells() * trials; }
};

void to_json(nlohmann::json &j, const ExperimentSpec &spec);
void from_json(const nlohmann::json &j, ExperimentSpec &spec);

// Fixed, documented column order for one kind's records.
std::vector<std::string> record_columns(ExperimentKind k);

// The pure per-record function: record index = cell * trials + trial.
nlohmann::ordered_json compute_record(const ExperimentSpec &spec, int64_t cell, int64_t trial);

// Runs records [first_index, total) through the worker pool and hands them to
// sink in index order.
void for_each_record(const ExperimentSpec &spec, int64_t first_index,
                     const std::function<void(int64_t, const nlohmann::ordered_json &)> &sink);

std::vector<nlohmann::ordered_json> collect_records(const ExperimentSpec &spec);

struct SweepResult {
  int64_t cells = 0;
  int64_t records_total = 0;
  int64_t records_written = 0;
  int64_t records_reused = 0;  // kept from an earlier partial file
};

// format "csv" or "json" (JSON Lines). Every record is flushed as written.
// With resume, complete leading cells in an existing file are kept, a
// partial trailing cell is truncated, and the sweep continues from there.
SweepResult run_sweep(const ExperimentSpec &spec, const std::string &path,
                      const std::string &format, bool resume);

std::string record_csv_header(ExperimentKind k);
std::string record_csv_line(ExperimentKind k, const nlohmann::ordered_json &rec);

}  // namespace psat
