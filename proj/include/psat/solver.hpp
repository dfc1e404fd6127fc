#pragma once

// The three random processes on a 3-CNF: local search (flip a uniform member
// of the improving set), modified local search (consider a uniform variable,
// flip iff strictly improving), and straight descent (consider a uniform
// variable, set it to one), plus the coupled SD/LS run and the SD uniformity
// probe. Every run carries a full trace.

#include <cstdint>
#include <optional>
#include <vector>

#include "psat/cnf.hpp"

#include "json.hpp"

namespace psat {

enum class SolverKind : uint8_t { LS, MLS, SD };
enum class RunStatus : uint8_t { satisfied, proper_local_minimum, step_budget_exhausted };

const char *to_string(SolverKind k);
const char *to_string(RunStatus s);

struct Step {
  int64_t step_index = 0;
  Var considered_variable = 0;
  bool flipped = false;
  // votes toward one minus votes toward zero for the considered variable,
  // under the assignment in force when it was considered
  int64_t righteous_margin = 0;
};

struct RunTrace {
  SolverKind kind = SolverKind::LS;
  Assignment initial;
  std::vector<Step> steps;  // empty when step recording is off
  Assignment final;
  RunStatus status = RunStatus::satisfied;
  int64_t steps_taken = 0;  // LS: flips; MLS/SD: all considered picks
  int64_t flips = 0;
};

// Default safety valves: LS can flip at most m times, MLS considers far fewer
// than 4 n ln(n) (m+1) picks before its improving set empties.
int64_t default_ls_budget(const Formula &f);
int64_t default_mls_budget(const Formula &f);

// When initial is absent it is drawn uniformly from all 2^n tuples using the
// run's own seed stream. step_budget < 0 selects the default valve; running
// out is reported through status, never thrown.
RunTrace local_search(const Formula &f, std::optional<Assignment> initial, uint64_t seed,
                      int64_t step_budget = -1, bool record_steps = true);
RunTrace modified_local_search(const Formula &f, std::optional<Assignment> initial, uint64_t seed,
                               int64_t step_budget = -1, bool record_steps = true);

// Requires a formula every clause of which has a positive literal (the
// planted all-ones shape); rejects anything else. The process itself reads
// only f.n(): picks are formula-independent, zeros are set to one until the
// assignment is all-ones. Margins are filled in by replaying the finished
// trace against the formula.
RunTrace straight_descent(const Formula &f, std::optional<Assignment> initial, uint64_t seed,
                          bool record_steps = true);

struct CoupledTrace {
  Assignment initial;
  std::vector<int64_t> distance;  // Hamming distance after each shared step
  int64_t terminal_distance = 0;
  int64_t steps_taken = 0;
  RunStatus sd_status = RunStatus::satisfied;
  RunStatus ls_status = RunStatus::satisfied;
  Assignment sd_final;
  Assignment ls_final;
};

// One shared stream of uniform variable picks drives SD and an MLS-style LS
// in lockstep from the same initial assignment until both halt.
CoupledTrace coupled_run(const Formula &f, std::optional<Assignment> initial, uint64_t seed);

struct UniformityTable {
  int32_t n = 0;
  int32_t m0 = 0;
  int64_t t = 0;
  int64_t trials = 0;
  struct ClassTable {
    int32_t ones = 0;
    std::vector<uint64_t> pattern;  // all n-bit words with that many ones
    std::vector<uint64_t> count;    // observations aligned with pattern
  };
  std::vector<ClassTable> classes;  // ascending ones count, observed only
};

// Runs SD for t picks from uniform initial vectors with exactly m0 ones and
// buckets the step-t vector by its ones count. n <= 16 so every class is
// enumerable.
UniformityTable uniformity_probe(int32_t n, int32_t m0, int64_t t, int64_t trials,
                                 uint64_t seed);

// full = per-step records included; compact = statuses and counters only.
nlohmann::ordered_json trace_json(const RunTrace &t, bool full);
nlohmann::ordered_json coupled_json(const CoupledTrace &t, bool full);

}  // namespace psat
