#include "psat/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "psat/rng.hpp"

namespace psat {

namespace {

// Incrementally maintained solver state: per-clause true-literal counts,
// per-variable vote tallies, and the improving set U as an indexed set with
// O(1) membership updates and O(1) uniform picks. A flip touches only the
// clauses containing the flipped variable, so it costs O(degree).
class Engine {
 public:
  Engine(const Formula &f, Assignment initial)
      : f_(f), n_(f.n()), a_(std::move(initial)) {
    if ((int64_t)a_.size() != n_) throw error(errc::invalid_argument, "initial assignment length");
    build_occurrences();
    rebuild_state();
  }

  const Assignment &assignment() const { return a_; }
  int64_t sat() const { return sat_; }
  int64_t margin(Var v) const { return one_[v] - zero_[v]; }
  int64_t delta(Var v) const { return a_.v[v] ? -margin(v) : margin(v); }
  bool u_empty() const { return members_.empty(); }
  size_t u_size() const { return members_.size(); }
  Var u_member(size_t i) const { return members_[i]; }

  void flip(Var v) {
    for (int64_t j = occ_off_[v]; j < occ_off_[v + 1]; j++) apply_votes(occ_clause_[j], -1);
    a_.v[v] ^= 1;
    for (int64_t j = occ_off_[v]; j < occ_off_[v + 1]; j++) {
      const int64_t c = occ_clause_[j];
      bool now_true = false;
      for (Lit l : f_.clause((size_t)c).lit)
        if (l.var() == v) now_true = l.positive() == (a_.v[v] != 0);
      if (now_true) {
        if (tcount_[c]++ == 0) sat_++;
      } else {
        if (--tcount_[c] == 0) sat_--;
      }
    }
    for (int64_t j = occ_off_[v]; j < occ_off_[v + 1]; j++) apply_votes(occ_clause_[j], +1);
    for (int64_t j = occ_off_[v]; j < occ_off_[v + 1]; j++)
      for (Lit l : f_.clause((size_t)occ_clause_[j]).lit) refresh_u(l.var());
    refresh_u(v);
  }

  // Recompute every piece of state from scratch and compare; a mismatch is an
  // engine bug, not a caller error.
  void audit() const {
    const VoteTally votes = compute_votes(f_, a_);
    for (Var v = 0; v < n_; v++)
      if (votes.to_one[v] != one_[v] || votes.to_zero[v] != zero_[v])
        throw error(errc::internal, "incremental vote tally out of sync");
    if (sat_ != sat_count(f_, a_)) throw error(errc::internal, "incremental sat count out of sync");
    std::vector<Var> u = members_;
    std::sort(u.begin(), u.end());
    if (u != improving_set(f_, a_)) throw error(errc::internal, "improving set out of sync");
  }

 private:
  void build_occurrences() {
    const int64_t m = f_.m();
    occ_off_.assign((size_t)n_ + 1, 0);
    for (int64_t c = 0; c < m; c++)
      for (Lit l : f_.clause((size_t)c).lit) occ_off_[(size_t)l.var() + 1]++;
    for (int64_t v = 0; v < n_; v++) occ_off_[(size_t)v + 1] += occ_off_[(size_t)v];
    occ_clause_.resize((size_t)m * 3);
    std::vector<int64_t> cursor(occ_off_.begin(), occ_off_.end() - 1);
    for (int64_t c = 0; c < m; c++)
      for (Lit l : f_.clause((size_t)c).lit) occ_clause_[(size_t)cursor[l.var()]++] = c;
  }

  void rebuild_state() {
    const int64_t m = f_.m();
    tcount_.assign((size_t)m, 0);
    one_.assign((size_t)n_, 0);
    zero_.assign((size_t)n_, 0);
    sat_ = 0;
    for (int64_t c = 0; c < m; c++) {
      for (Lit l : f_.clause((size_t)c).lit)
        if (l.positive() == (a_.v[l.var()] != 0)) tcount_[c]++;
      if (tcount_[c] > 0) sat_++;
      apply_votes(c, +1);
    }
    members_.clear();
    where_.assign((size_t)n_, -1);
    for (Var v = 0; v < n_; v++) refresh_u(v);
  }

  // Add (sign=+1) or remove (sign=-1) clause c's votes under current state.
  void apply_votes(int64_t c, int64_t sign) {
    const Clause &cl = f_.clause((size_t)c);
    if (tcount_[c] == 0) {
      for (Lit l : cl.lit) (l.positive() ? one_ : zero_)[l.var()] += sign;
    } else if (tcount_[c] == 1) {
      for (Lit l : cl.lit)
        if (l.positive() == (a_.v[l.var()] != 0)) (l.positive() ? one_ : zero_)[l.var()] += sign;
    }
  }

  void refresh_u(Var v) {
    const bool want = delta(v) > 0;
    const bool have = where_[v] >= 0;
    if (want == have) return;
    if (want) {
      where_[v] = (int64_t)members_.size();
      members_.push_back(v);
    } else {
      const Var last = members_.back();
      members_[(size_t)where_[v]] = last;
      where_[last] = where_[v];
      members_.pop_back();
      where_[v] = -1;
    }
  }

  const Formula &f_;
  int64_t n_;
  Assignment a_;
  std::vector<int64_t> occ_off_, occ_clause_;
  std::vector<int64_t> tcount_;
  std::vector<int64_t> one_, zero_;
  std::vector<Var> members_;
  std::vector<int64_t> where_;
  int64_t sat_ = 0;
};

Assignment random_assignment(int32_t n, Rng &rng) {
  Assignment a((size_t)n);
  for (int32_t i = 0; i < n; i++) a.v[i] = (uint8_t)rng.coin();
  return a;
}

Assignment resolve_initial(const Formula &f, std::optional<Assignment> &initial, Rng &rng) {
  if (initial) {
    if ((int64_t)initial->size() != f.n())
      throw error(errc::invalid_argument, "initial assignment length");
    return std::move(*initial);
  }
  return random_assignment(f.n(), rng);
}

// Audit cadence: every step on small instances, sampled on large ones.
bool audit_due(int32_t n, int64_t step) { return n <= 10 || (step & 1023) == 0; }

void check_terminal(const Formula &f, const RunTrace &t) {
  if (t.status == RunStatus::step_budget_exhausted) return;
  const bool sat = unsat_count(f, t.final) == 0;
  if (t.status == RunStatus::satisfied && !sat)
    throw error(errc::internal, "satisfied status with unsatisfied clauses");
  if (t.status == RunStatus::proper_local_minimum &&
      (sat || !improving_set(f, t.final).empty()))
    throw error(errc::internal, "proper local minimum status misreported");
}

bool all_clauses_have_positive(const Formula &f) {
  for (const Clause &c : f.clauses())
    if (clause_type(c) == ClauseType::nnn) return false;
  return true;
}

// Decorate an SD trace with vote margins by replaying it; the process itself
// never looked at the clauses.
void replay_margins(const Formula &f, RunTrace &t) {
  Engine e(f, t.initial);
  for (Step &s : t.steps) {
    s.righteous_margin = e.margin(s.considered_variable);
    if (s.flipped) e.flip(s.considered_variable);
  }
}

}  // namespace

const char *to_string(SolverKind k) {
  switch (k) {
    case SolverKind::LS: return "LS";
    case SolverKind::MLS: return "MLS";
    case SolverKind::SD: return "SD";
  }
  return "?";
}

const char *to_string(RunStatus s) {
  switch (s) {
    case RunStatus::satisfied: return "satisfied";
    case RunStatus::proper_local_minimum: return "proper_local_minimum";
    case RunStatus::step_budget_exhausted: return "step_budget_exhausted";
  }
  return "?";
}

int64_t default_ls_budget(const Formula &f) { return f.m() * f.n(); }

int64_t default_mls_budget(const Formula &f) {
  const double n = (double)f.n();
  return (int64_t)std::ceil(4.0 * n * std::log(n) * (double)(f.m() + 1));
}

RunTrace local_search(const Formula &f, std::optional<Assignment> initial, uint64_t seed,
                      int64_t step_budget, bool record_steps) {
  Rng rng(seed);
  RunTrace t;
  t.kind = SolverKind::LS;
  t.initial = resolve_initial(f, initial, rng);
  const int64_t budget = step_budget < 0 ? default_ls_budget(f) : step_budget;

  Engine e(f, t.initial);
  int64_t step = 0;
  bool exhausted = false;
  while (!e.u_empty()) {
    if (step >= budget) {
      exhausted = true;
      break;
    }
    const Var x = e.u_member((size_t)rng.below(e.u_size()));
    if (record_steps) t.steps.push_back({step, x, true, e.margin(x)});
    const int64_t before = e.sat();
    e.flip(x);
    if (e.sat() <= before) throw error(errc::internal, "non-improving LS flip");
    t.flips++;
    step++;
    if (audit_due(f.n(), step)) e.audit();
  }
  t.steps_taken = step;
  t.final = e.assignment();
  t.status = exhausted ? RunStatus::step_budget_exhausted
             : e.sat() == f.m() ? RunStatus::satisfied
                                : RunStatus::proper_local_minimum;
  check_terminal(f, t);
  return t;
}

RunTrace modified_local_search(const Formula &f, std::optional<Assignment> initial, uint64_t seed,
                               int64_t step_budget, bool record_steps) {
  Rng rng(seed);
  RunTrace t;
  t.kind = SolverKind::MLS;
  t.initial = resolve_initial(f, initial, rng);
  const int64_t budget = step_budget < 0 ? default_mls_budget(f) : step_budget;

  Engine e(f, t.initial);
  int64_t step = 0;
  bool exhausted = false;
  while (!e.u_empty()) {
    if (step >= budget) {
      exhausted = true;
      break;
    }
    const Var x = (Var)rng.below((uint64_t)f.n());
    const bool improves = e.delta(x) > 0;
    if (record_steps) t.steps.push_back({step, x, improves, e.margin(x)});
    if (improves) {
      const int64_t before = e.sat();
      e.flip(x);
      if (e.sat() <= before) throw error(errc::internal, "non-improving MLS flip");
      t.flips++;
    }
    step++;
    if (audit_due(f.n(), step)) e.audit();
  }
  t.steps_taken = step;
  t.final = e.assignment();
  t.status = exhausted ? RunStatus::step_budget_exhausted
             : e.sat() == f.m() ? RunStatus::satisfied
                                : RunStatus::proper_local_minimum;
  check_terminal(f, t);
  return t;
}

RunTrace straight_descent(const Formula &f, std::optional<Assignment> initial, uint64_t seed,
                          bool record_steps) {
  if (!all_clauses_have_positive(f))
    throw error(errc::invalid_argument, "straight descent needs a formula satisfied by all-ones");
  Rng rng(seed);
  RunTrace t;
  t.kind = SolverKind::SD;
  t.initial = resolve_initial(f, initial, rng);

  const int32_t n = f.n();
  Assignment a = t.initial;
  int64_t zeros = (int64_t)n - ones_count(a);
  // SD halts with probability one; this valve only trips on an engine bug.
  const int64_t valve = 1000 + (int64_t)std::ceil(200.0 * n * std::log((double)n));
  int64_t step = 0;
  bool exhausted = false;
  while (zeros > 0) {
    if (step >= valve) {
      exhausted = true;
      break;
    }
    const Var x = (Var)rng.below((uint64_t)n);
    const bool flip = a.v[x] == 0;
    if (flip) {
      a.v[x] = 1;
      zeros--;
      t.flips++;
    }
    if (record_steps) t.steps.push_back({step, x, flip, 0});
    step++;
  }
  t.steps_taken = step;
  t.final = std::move(a);
  t.status = exhausted ? RunStatus::step_budget_exhausted : RunStatus::satisfied;
  if (record_steps) replay_margins(f, t);
  check_terminal(f, t);
  return t;
}

CoupledTrace coupled_run(const Formula &f, std::optional<Assignment> initial, uint64_t seed) {
  if (!all_clauses_have_positive(f))
    throw error(errc::invalid_argument, "coupled run needs a formula satisfied by all-ones");
  Rng rng(seed);
  CoupledTrace t;
  t.initial = resolve_initial(f, initial, rng);

  const int32_t n = f.n();
  Engine ls(f, t.initial);
  Assignment sd = t.initial;
  int64_t zeros = (int64_t)n - ones_count(sd);
  int64_t dist = 0;  // starts at 0: both sides share the initial assignment
  const int64_t valve = std::max(default_mls_budget(f),
                                 1000 + (int64_t)std::ceil(200.0 * n * std::log((double)n)));
  int64_t step = 0;
  while (zeros > 0 || !ls.u_empty()) {
    if (step >= valve) break;
    const Var x = (Var)rng.below((uint64_t)n);
    const bool differed = sd.v[x] != ls.assignment().v[x];
    if (sd.v[x] == 0) {
      sd.v[x] = 1;
      zeros--;
    }
    if (ls.delta(x) > 0) ls.flip(x);
    const bool differs = sd.v[x] != ls.assignment().v[x];
    dist += (int64_t)differs - (int64_t)differed;
    t.distance.push_back(dist);
    step++;
    if (audit_due(n, step)) ls.audit();
  }
  t.steps_taken = step;
  t.terminal_distance = dist;
  t.sd_final = std::move(sd);
  t.ls_final = ls.assignment();
  if (hamming(t.sd_final, t.ls_final) != dist)
    throw error(errc::internal, "coupled distance out of sync");
  t.sd_status = zeros == 0 ? RunStatus::satisfied : RunStatus::step_budget_exhausted;
  t.ls_status = !ls.u_empty()         ? RunStatus::step_budget_exhausted
                : ls.sat() == f.m()   ? RunStatus::satisfied
                                      : RunStatus::proper_local_minimum;
  return t;
}

UniformityTable uniformity_probe(int32_t n, int32_t m0, int64_t t, int64_t trials,
                                 uint64_t seed) {
  if (n < 1 || n > 16) throw error(errc::limit, "uniformity probe needs 1 <= n <= 16");
  if (m0 < 0 || m0 > n) throw error(errc::invalid_argument, "m0 out of range");
  if (t < 0 || trials < 1) throw error(errc::invalid_argument, "need t >= 0 and trials >= 1");

  UniformityTable table;
  table.n = n;
  table.m0 = m0;
  table.t = t;
  table.trials = trials;

  std::vector<int64_t> observed((size_t)1 << n, 0);
  for (int64_t trial = 0; trial < trials; trial++) {
    Rng rng(derive_stream(seed, (uint64_t)trial));
    uint32_t bits = 0;
    for (int32_t v : rng.subset(n, m0)) bits |= 1u << v;
    int64_t zeros = n - m0;
    for (int64_t s = 0; s < t; s++) {
      const Var x = (Var)rng.below((uint64_t)n);
      if (!(bits >> x & 1)) {
        bits |= 1u << x;
        zeros--;
      }
    }
    observed[bits]++;
  }

  for (int32_t ones = 0; ones <= n; ones++) {
    UniformityTable::ClassTable cls;
    cls.ones = ones;
    uint64_t total = 0;
    for (uint32_t bits = 0; bits < (1u << n); bits++) {
      if (std::popcount(bits) != ones) continue;
      cls.pattern.push_back(bits);
      cls.count.push_back((uint64_t)observed[bits]);
      total += (uint64_t)observed[bits];
    }
    if (total > 0) table.classes.push_back(std::move(cls));
  }
  return table;
}

nlohmann::ordered_json trace_json(const RunTrace &t, bool full) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(t.kind);
  j["n"] = t.initial.size();
  j["status"] = to_string(t.status);
  j["steps_taken"] = t.steps_taken;
  j["flips"] = t.flips;
  j["initial_ones"] = ones_count(t.initial);
  j["final_ones"] = ones_count(t.final);
  if (full) {
    auto bits = [](const Assignment &a) {
      std::string s(a.size(), '0');
      for (size_t i = 0; i < a.size(); i++) s[i] = a.v[i] ? '1' : '0';
      return s;
    };
    j["initial"] = bits(t.initial);
    j["final"] = bits(t.final);
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const Step &s : t.steps)
      steps.push_back({{"step", s.step_index},
                       {"variable", s.considered_variable},
                       {"flipped", s.flipped},
                       {"righteous_margin", s.righteous_margin}});
    j["steps"] = std::move(steps);
  }
  return j;
}

nlohmann::ordered_json coupled_json(const CoupledTrace &t, bool full) {
  nlohmann::ordered_json j;
  j["n"] = t.initial.size();
  j["steps_taken"] = t.steps_taken;
  j["terminal_distance"] = t.terminal_distance;
  j["max_distance"] = t.distance.empty() ? 0 : *std::max_element(t.distance.begin(), t.distance.end());
  j["sd_status"] = to_string(t.sd_status);
  j["ls_status"] = to_string(t.ls_status);
  if (full) j["distance"] = t.distance;
  return j;
}

}  // namespace psat
