#include "psat/experiment.hpp"

#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "psat/census.hpp"
#include "psat/oracle.hpp"
#include "psat/rng.hpp"
#include "psat/stats.hpp"

namespace psat {

namespace {

constexpr const char *kind_names[] = {
    "transition_sweep", "sd_runtime",       "sd_uniformity", "zero_flood",
    "minima_geometry",  "structure_census", "approx_gap",    "coupled_distance",
};

bool needs_planted(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::transition_sweep:
    case ExperimentKind::sd_runtime:
    case ExperimentKind::zero_flood:
    case ExperimentKind::minima_geometry:
    case ExperimentKind::coupled_distance:
      return true;
    default:
      return false;
  }
}

bool uses_solver(ExperimentKind k) {
  return k == ExperimentKind::transition_sweep || k == ExperimentKind::minima_geometry ||
         k == ExperimentKind::approx_gap;
}

struct Cell {
  int32_t n = 0;
  double kappa = -1.0;
  double rho = -1.0;
  int64_t m = 0;  // resolved clause count requested from the sampler
};

int64_t density_count(const ExperimentSpec &s) {
  const size_t d = s.kappa_grid.size() + s.rho_grid.size() + s.m_grid.size();
  return d == 0 ? 1 : (int64_t)d;
}

Cell resolve_cell(const ExperimentSpec &s, int64_t cell) {
  const int64_t d = density_count(s);
  Cell c;
  c.n = s.n_grid[(size_t)(cell / d)];
  const int64_t di = cell % d;
  if (!s.kappa_grid.empty()) {
    c.kappa = s.kappa_grid[(size_t)di];
    c.m = density_for_kappa(c.n, c.kappa);
  } else if (!s.rho_grid.empty()) {
    c.rho = s.rho_grid[(size_t)di];
    c.m = std::llround(c.rho * c.n);
  } else if (!s.m_grid.empty()) {
    c.m = s.m_grid[(size_t)di];
  }
  return c;
}

Assignment bernoulli_initial(int32_t n, double p1, uint64_t seed) {
  Rng rng(seed);
  Assignment a((size_t)n);
  for (int32_t i = 0; i < n; i++)
    a.v[i] = p1 < 0 ? (uint8_t)rng.coin() : (uint8_t)(rng.next_double() < p1);
  return a;
}

std::optional<Assignment> spec_initial(const ExperimentSpec &s, int32_t n, uint64_t seed) {
  if (s.initial_one_fraction < 0) return std::nullopt;
  return bernoulli_initial(n, s.initial_one_fraction, seed);
}

RunTrace run_solver(SolverKind kind, const Formula &f, std::optional<Assignment> init,
                    uint64_t seed) {
  if (kind == SolverKind::MLS) return modified_local_search(f, std::move(init), seed, -1, false);
  return local_search(f, std::move(init), seed, -1, false);
}

// Second-belt verification on a 1% sample: the recorded terminal facts must
// re-derive from the formula and final assignment alone.
void audit_run(const Formula &f, const RunTrace &r, bool due) {
  if (!due || r.status == RunStatus::step_budget_exhausted) return;
  const bool sat = unsat_count(f, r.final) == 0;
  const bool min = improving_set(f, r.final).empty();
  if (r.status == RunStatus::satisfied && !(sat && min))
    throw error(errc::internal, "record audit: satisfied status does not re-verify");
  if (r.status == RunStatus::proper_local_minimum && (sat || !min))
    throw error(errc::internal, "record audit: proper minimum status does not re-verify");
}

void put_common(nlohmann::ordered_json &rec, const ExperimentSpec &s, const Cell &c,
                int64_t cell, int64_t trial, uint64_t master, int64_t m_actual) {
  rec["kind"] = to_string(s.kind);
  rec["cell"] = cell;
  rec["trial"] = trial;
  rec["n"] = c.n;
  rec["m"] = m_actual;
  rec["kappa"] = c.kappa;
  rec["rho"] = c.rho;
  rec["mode"] = to_string(s.mode);
  rec["seed"] = master;
}

}  // namespace

std::string to_string(ExperimentKind k) { return kind_names[(size_t)k]; }

ExperimentKind experiment_kind_from_string(const std::string &s) {
  for (size_t i = 0; i < std::size(kind_names); i++)
    if (s == kind_names[i]) return (ExperimentKind)i;
  throw error(errc::invalid_argument, "unknown experiment kind: " + s);
}

void ExperimentSpec::validate() const {
  if (n_grid.empty()) throw error(errc::invalid_argument, "n grid is empty");
  for (int32_t n : n_grid)
    if (n < 3) throw error(errc::invalid_argument, "grid n < 3");
  const size_t knobs = (!kappa_grid.empty()) + (!rho_grid.empty()) + (!m_grid.empty());
  if (kind == ExperimentKind::sd_uniformity) {
    if (knobs != 0)
      throw error(errc::invalid_argument, "sd_uniformity takes no density grid");
  } else if (knobs != 1) {
    throw error(errc::invalid_argument, "exactly one of kappa/rho/m grids must be set");
  }
  for (double k : kappa_grid)
    if (!(k > 0)) throw error(errc::invalid_argument, "kappa must be positive");
  for (double r : rho_grid)
    if (!(r > 0)) throw error(errc::invalid_argument, "rho must be positive");
  for (int64_t m : m_grid)
    if (m < 0) throw error(errc::invalid_argument, "m must be non-negative");
  if (trials < 1) throw error(errc::invalid_argument, "trials must be >= 1");
  if (threads < 1) throw error(errc::invalid_argument, "threads must be >= 1");
  if (initial_one_fraction > 1.0)
    throw error(errc::invalid_argument, "initial_one_fraction must be <= 1");
  if (needs_planted(kind) && mode != SampleMode::planted)
    throw error(errc::invalid_argument, to_string(kind) + " requires planted mode");
  if (uses_solver(kind) && solver == SolverKind::SD)
    throw error(errc::invalid_argument, to_string(kind) + " runs LS or MLS, not SD");
  if (kind == ExperimentKind::zero_flood) {
    if (!(q0 >= 0 && q0 < q1 && q1 <= 1))
      throw error(errc::invalid_argument, "zero_flood needs 0 <= q0 < q1 <= 1");
    if (flood_batch < 1) throw error(errc::invalid_argument, "flood_batch must be >= 1");
  }
  if (kind == ExperimentKind::sd_uniformity) {
    for (int32_t n : n_grid)
      if (n > 16) throw error(errc::invalid_argument, "sd_uniformity needs n <= 16");
    if (probe_m0 < 0 || probe_t < 0 || probe_trials < 1)
      throw error(errc::invalid_argument, "bad uniformity probe parameters");
  }
  if (kind == ExperimentKind::structure_census && (isolation_d1 < 1 || isolation_d2 < 1))
    throw error(errc::invalid_argument, "isolation scan needs d1 >= 1 and d2 >= 1");
  if (implant_crowns < 0) throw error(errc::invalid_argument, "implant_crowns must be >= 0");
  if (kind == ExperimentKind::approx_gap && implant_crowns > 0)
    for (int32_t n : n_grid)
      if ((int64_t)n - 9 * implant_crowns < 3)
        throw error(errc::invalid_argument, "n too small for the requested crown implants");
}

int64_t ExperimentSpec::cells() const { return (int64_t)n_grid.size() * density_count(*this); }

std::vector<std::string> record_columns(ExperimentKind k) {
  std::vector<std::string> cols = {"kind", "cell", "trial", "n", "m", "kappa", "rho", "mode",
                                   "seed"};
  auto add = [&](std::initializer_list<const char *> more) {
    for (const char *c : more) cols.push_back(c);
  };
  switch (k) {
    case ExperimentKind::transition_sweep:
      add({"solver", "status", "steps_taken", "flips", "final_unsat", "final_ones", "success"});
      break;
    case ExperimentKind::sd_runtime:
      add({"steps_taken", "flips", "bound", "within_bound"});
      break;
    case ExperimentKind::sd_uniformity:
      add({"m0", "t", "probe_trials", "classes_observed", "classes_tested", "min_p",
           "uniform_ok"});
      break;
    case ExperimentKind::zero_flood:
      add({"z0", "z1", "batch", "min_sat_q0", "max_sat_q1", "separated"});
      break;
    case ExperimentKind::minima_geometry:
      add({"solver", "status", "initial_ones", "final_ones", "final_unsat"});
      break;
    case ExperimentKind::structure_census:
      add({"caps", "crowns", "max_degree", "d1", "d2", "isolated_pairs"});
      break;
    case ExperimentKind::approx_gap:
      add({"solver", "implanted", "crowns_present", "crowns_zero_init",
           "zero_init_central_unsat", "final_sat", "opt", "gap"});
      break;
    case ExperimentKind::coupled_distance:
      add({"steps_taken", "max_distance", "terminal_distance", "sd_status", "ls_status"});
      break;
  }
  return cols;
}

nlohmann::ordered_json compute_record(const ExperimentSpec &spec, int64_t cell, int64_t trial) {
  const Cell c = resolve_cell(spec, cell);
  const uint64_t master = derive_stream(derive_stream(spec.base_seed, (uint64_t)cell),
                                        (uint64_t)trial);
  const uint64_t formula_seed = derive_stream(master, 0);
  const uint64_t solver_seed = derive_stream(master, 1);
  const uint64_t init_seed = derive_stream(master, 2);
  const uint64_t aux_seed = derive_stream(master, 3);
  const bool audit_due = (cell * spec.trials + trial) % 100 == 0;

  nlohmann::ordered_json rec;
  switch (spec.kind) {
    case ExperimentKind::transition_sweep: {
      Formula f = sample_planted(c.n, c.m, formula_seed);
      RunTrace r = run_solver(spec.solver, f, spec_initial(spec, c.n, init_seed), solver_seed);
      audit_run(f, r, audit_due);
      put_common(rec, spec, c, cell, trial, master, f.m());
      rec["solver"] = to_string(spec.solver);
      rec["status"] = to_string(r.status);
      rec["steps_taken"] = r.steps_taken;
      rec["flips"] = r.flips;
      rec["final_unsat"] = unsat_count(f, r.final);
      rec["final_ones"] = ones_count(r.final);
      rec["success"] = (int)(r.status == RunStatus::satisfied);
      break;
    }
    case ExperimentKind::sd_runtime: {
      Formula f = sample_planted(c.n, c.m, formula_seed);
      RunTrace r = straight_descent(f, spec_initial(spec, c.n, init_seed), solver_seed, false);
      audit_run(f, r, audit_due);
      const double bound = 2.0 * c.n * std::log((double)c.n);
      put_common(rec, spec, c, cell, trial, master, f.m());
      rec["steps_taken"] = r.steps_taken;
      rec["flips"] = r.flips;
      rec["bound"] = bound;
      rec["within_bound"] = (int)((double)r.steps_taken <= bound);
      break;
    }
    case ExperimentKind::sd_uniformity: {
      UniformityTable table =
          uniformity_probe(c.n, spec.probe_m0, spec.probe_t, spec.probe_trials, formula_seed);
      double min_p = 1.0;
      int64_t tested = 0;
      for (const auto &cls : table.classes) {
        if (cls.count.size() < 2) continue;
        uint64_t total = 0;
        for (uint64_t v : cls.count) total += v;
        if (total < 5 * cls.count.size()) continue;  // chi-square needs mass per cell
        min_p = std::min(min_p, chi_square_uniform(cls.count).p);
        tested++;
      }
      put_common(rec, spec, c, cell, trial, master, 0);
      rec["m0"] = spec.probe_m0;
      rec["t"] = spec.probe_t;
      rec["probe_trials"] = spec.probe_trials;
      rec["classes_observed"] = (int64_t)table.classes.size();
      rec["classes_tested"] = tested;
      rec["min_p"] = min_p;
      rec["uniform_ok"] = (int)(tested > 0 && min_p > 0.001);
      break;
    }
    case ExperimentKind::zero_flood: {
      Formula f = sample_planted(c.n, c.m, formula_seed);
      const int32_t z0 = (int32_t)std::llround(spec.q0 * c.n);
      const int32_t z1 = (int32_t)std::llround(spec.q1 * c.n);
      Rng rng(aux_seed);
      auto extreme_sat = [&](int32_t zeros, bool minimum) {
        int64_t best = minimum ? INT64_MAX : INT64_MIN;
        for (int64_t i = 0; i < spec.flood_batch; i++) {
          Assignment a((size_t)c.n, 1);
          for (int32_t v : rng.subset(c.n, zeros)) a.v[v] = 0;
          const int64_t s = sat_count(f, a);
          best = minimum ? std::min(best, s) : std::max(best, s);
        }
        return best;
      };
      const int64_t min_q0 = extreme_sat(z0, true);
      const int64_t max_q1 = extreme_sat(z1, false);
      put_common(rec, spec, c, cell, trial, master, f.m());
      rec["z0"] = z0;
      rec["z1"] = z1;
      rec["batch"] = spec.flood_batch;
      rec["min_sat_q0"] = min_q0;
      rec["max_sat_q1"] = max_q1;
      rec["separated"] = (int)(min_q0 > max_q1);
      break;
    }
    case ExperimentKind::minima_geometry: {
      Formula f = sample_planted(c.n, c.m, formula_seed);
      RunTrace r = run_solver(spec.solver, f, spec_initial(spec, c.n, init_seed), solver_seed);
      audit_run(f, r, audit_due);
      put_common(rec, spec, c, cell, trial, master, f.m());
      rec["solver"] = to_string(spec.solver);
      rec["status"] = to_string(r.status);
      rec["initial_ones"] = ones_count(r.initial);
      rec["final_ones"] = ones_count(r.final);
      rec["final_unsat"] = unsat_count(f, r.final);
      break;
    }
    case ExperimentKind::structure_census: {
      GeneratorSpec gs;
      gs.n = c.n;
      gs.m = c.m;
      gs.mode = spec.mode;
      Formula f = sample(gs, formula_seed);
      const PrimalGraph g = primal_graph(f);
      put_common(rec, spec, c, cell, trial, master, f.m());
      rec["caps"] = count_caps(f);
      rec["crowns"] = count_crowns(f);
      rec["max_degree"] = max_degree(g);
      rec["d1"] = spec.isolation_d1;
      rec["d2"] = spec.isolation_d2;
      rec["isolated_pairs"] = (int64_t)isolation_pair_scan(f, spec.isolation_d1,
                                                           spec.isolation_d2).size();
      break;
    }
    case ExperimentKind::approx_gap: {
      const int64_t k = spec.implant_crowns;
      const int32_t base_n = c.n - (int32_t)(9 * k);
      GeneratorSpec gs;
      gs.n = base_n;
      gs.m = c.m;
      gs.mode = spec.mode;
      Formula f = widen(sample(gs, formula_seed), c.n);
      if (k > 0) {
        std::vector<Clause> gadgets;
        for (int64_t i = 0; i < k; i++)
          for (const Clause &cl : make_crown_clauses(base_n + (int32_t)(9 * i)))
            gadgets.push_back(cl);
        f = concat(f, Formula(c.n, std::move(gadgets)));
      }
      const std::vector<Crown> crowns = find_crowns(f);
      Assignment init = bernoulli_initial(c.n, spec.initial_one_fraction, init_seed);
      RunTrace r = run_solver(spec.solver, f, init, solver_seed);
      audit_run(f, r, audit_due);
      int64_t zero_init = 0, central_unsat = 0;
      for (const Crown &cr : crowns) {
        bool all_zero = true;
        for (Var v : cr.x) all_zero = all_zero && init.v[v] == 0;
        if (!all_zero) continue;
        zero_init++;
        if (!is_satisfied(f.clause((size_t)cr.pos[0]), r.final)) central_unsat++;
      }
      const int64_t final_sat = sat_count(f, r.final);
      int64_t opt = -1;
      if (spec.mode == SampleMode::planted)
        opt = f.m();
      else if (c.n <= 24)
        opt = brute_force_opt(f).opt;
      put_common(rec, spec, c, cell, trial, master, f.m());
      rec["solver"] = to_string(spec.solver);
      rec["implanted"] = k;
      rec["crowns_present"] = (int64_t)crowns.size();
      rec["crowns_zero_init"] = zero_init;
      rec["zero_init_central_unsat"] = central_unsat;
      rec["final_sat"] = final_sat;
      rec["opt"] = opt;
      rec["gap"] = opt >= 0 ? opt - final_sat : -1;
      break;
    }
    case ExperimentKind::coupled_distance: {
      Formula f = sample_planted(c.n, c.m, formula_seed);
      CoupledTrace r = coupled_run(f, spec_initial(spec, c.n, init_seed), solver_seed);
      int64_t mx = 0;
      for (int64_t d : r.distance) mx = std::max(mx, d);
      put_common(rec, spec, c, cell, trial, master, f.m());
      rec["steps_taken"] = r.steps_taken;
      rec["max_distance"] = mx;
      rec["terminal_distance"] = r.terminal_distance;
      rec["sd_status"] = to_string(r.sd_status);
      rec["ls_status"] = to_string(r.ls_status);
      break;
    }
  }
  return rec;
}

void for_each_record(const ExperimentSpec &spec, int64_t first_index,
                     const std::function<void(int64_t, const nlohmann::ordered_json &)> &sink) {
  spec.validate();
  const int64_t total = spec.total_records();
  if (first_index >= total) return;

  if (spec.threads == 1) {
    for (int64_t idx = first_index; idx < total; idx++)
      sink(idx, compute_record(spec, idx / spec.trials, idx % spec.trials));
    return;
  }

  std::mutex mu;
  std::condition_variable cv;
  std::map<int64_t, nlohmann::ordered_json> ready;
  std::exception_ptr failure;
  std::atomic<int64_t> next{first_index};

  auto work = [&] {
    for (;;) {
      const int64_t idx = next.fetch_add(1);
      if (idx >= total) return;
      try {
        nlohmann::ordered_json rec = compute_record(spec, idx / spec.trials, idx % spec.trials);
        std::lock_guard<std::mutex> lk(mu);
        ready.emplace(idx, std::move(rec));
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        if (!failure) failure = std::current_exception();
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (int32_t i = 0; i < spec.threads; i++) pool.emplace_back(work);

  for (int64_t write = first_index; write < total; write++) {
    nlohmann::ordered_json rec;
    {
      std::unique_lock<std::mutex> lk(mu);
      cv.wait(lk, [&] { return failure || ready.count(write); });
      if (failure) break;
      rec = std::move(ready.at(write));
      ready.erase(write);
    }
    sink(write, rec);
  }
  for (auto &t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<nlohmann::ordered_json> collect_records(const ExperimentSpec &spec) {
  std::vector<nlohmann::ordered_json> out;
  out.reserve((size_t)spec.total_records());
  for_each_record(spec, 0, [&](int64_t, const nlohmann::ordered_json &rec) {
    out.push_back(rec);
  });
  return out;
}

std::string record_csv_header(ExperimentKind k) {
  std::string h;
  for (const std::string &c : record_columns(k)) {
    if (!h.empty()) h += ',';
    h += c;
  }
  return h;
}

std::string record_csv_line(ExperimentKind k, const nlohmann::ordered_json &rec) {
  std::string line;
  char buf[64];
  for (const std::string &col : record_columns(k)) {
    if (!line.empty()) line += ',';
    const auto &v = rec.at(col);
    if (v.is_string()) {
      line += v.get<std::string>();
    } else if (v.is_number_float()) {
      std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
      line += buf;
    } else if (v.is_number_unsigned()) {
      std::snprintf(buf, sizeof buf, "%llu", (unsigned long long)v.get<uint64_t>());
      line += buf;
    } else {
      std::snprintf(buf, sizeof buf, "%lld", (long long)v.get<int64_t>());
      line += buf;
    }
  }
  return line;
}

SweepResult run_sweep(const ExperimentSpec &spec, const std::string &path,
                      const std::string &format, bool resume) {
  spec.validate();
  if (format != "csv" && format != "json")
    throw error(errc::invalid_argument, "format must be csv or json");
  const bool csv = format == "csv";

  SweepResult result;
  result.cells = spec.cells();
  result.records_total = spec.total_records();

  int64_t first = 0;
  namespace fs = std::filesystem;
  if (resume && fs::exists(path)) {
    std::ifstream in(path);
    if (!in) throw error(errc::io, "cannot read " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    in.close();
    if (csv) {
      if (lines.empty() || lines[0] != record_csv_header(spec.kind))
        throw error(errc::parse, "existing output does not match this spec's header");
    }
    const int64_t data = (int64_t)lines.size() - (csv ? 1 : 0);
    if (data < 0) throw error(errc::parse, "existing output is truncated");
    int64_t keep = (data / spec.trials) * spec.trials;  // whole cells only
    keep = std::min(keep, result.records_total);
    if (keep != data) {
      std::ofstream out(path, std::ios::trunc);
      if (!out) throw error(errc::io, "cannot rewrite " + path);
      for (int64_t i = 0; i < keep + (csv ? 1 : 0); i++) out << lines[(size_t)i] << '\n';
    }
    first = keep;
    result.records_reused = keep;
  } else {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw error(errc::io, "cannot write " + path);
    if (csv) out << record_csv_header(spec.kind) << '\n';
  }

  std::ofstream out(path, std::ios::app);
  if (!out) throw error(errc::io, "cannot append to " + path);
  for_each_record(spec, first, [&](int64_t, const nlohmann::ordered_json &rec) {
    out << (csv ? record_csv_line(spec.kind, rec) : rec.dump()) << '\n';
    out.flush();
    if (!out) throw error(errc::io, "write failed: " + path);
    result.records_written++;
  });
  return result;
}

void to_json(nlohmann::json &j, const ExperimentSpec &s) {
  j = nlohmann::json{{"kind", to_string(s.kind)},
                     {"n_grid", s.n_grid},
                     {"mode", to_string(s.mode)},
                     {"solver", to_string(s.solver)},
                     {"trials", s.trials},
                     {"base_seed", s.base_seed},
                     {"threads", s.threads}};
  if (!s.kappa_grid.empty()) j["kappa_grid"] = s.kappa_grid;
  if (!s.rho_grid.empty()) j["rho_grid"] = s.rho_grid;
  if (!s.m_grid.empty()) j["m_grid"] = s.m_grid;
  if (s.initial_one_fraction >= 0) j["initial_one_fraction"] = s.initial_one_fraction;
  if (s.kind == ExperimentKind::zero_flood) {
    j["q0"] = s.q0;
    j["q1"] = s.q1;
    j["flood_batch"] = s.flood_batch;
  }
  if (s.kind == ExperimentKind::sd_uniformity) {
    j["probe_m0"] = s.probe_m0;
    j["probe_t"] = s.probe_t;
    j["probe_trials"] = s.probe_trials;
  }
  if (s.kind == ExperimentKind::structure_census) {
    j["isolation_d1"] = s.isolation_d1;
    j["isolation_d2"] = s.isolation_d2;
  }
  if (s.kind == ExperimentKind::approx_gap) j["implant_crowns"] = s.implant_crowns;
}

void from_json(const nlohmann::json &j, ExperimentSpec &s) {
  s = ExperimentSpec{};
  s.kind = experiment_kind_from_string(j.at("kind").get<std::string>());
  s.n_grid = j.at("n_grid").get<std::vector<int32_t>>();
  s.kappa_grid = j.value("kappa_grid", std::vector<double>{});
  s.rho_grid = j.value("rho_grid", std::vector<double>{});
  s.m_grid = j.value("m_grid", std::vector<int64_t>{});
  if (j.contains("mode")) s.mode = sample_mode_from_string(j.at("mode").get<std::string>());
  if (j.contains("solver")) {
    const std::string v = j.at("solver").get<std::string>();
    if (v == "LS")
      s.solver = SolverKind::LS;
    else if (v == "MLS")
      s.solver = SolverKind::MLS;
    else if (v == "SD")
      s.solver = SolverKind::SD;
    else
      throw error(errc::invalid_argument, "unknown solver: " + v);
  }
  s.trials = j.value("trials", (int64_t)1);
  s.base_seed = j.value("base_seed", (uint64_t)0);
  s.threads = j.value("threads", (int32_t)1);
  s.initial_one_fraction = j.value("initial_one_fraction", -1.0);
  s.q0 = j.value("q0", 0.1);
  s.q1 = j.value("q1", 0.5);
  s.flood_batch = j.value("flood_batch", (int64_t)1000);
  s.probe_m0 = j.value("probe_m0", (int32_t)2);
  s.probe_t = j.value("probe_t", (int64_t)3);
  s.probe_trials = j.value("probe_trials", (int64_t)200000);
  s.isolation_d1 = j.value("isolation_d1", (int64_t)1);
  s.isolation_d2 = j.value("isolation_d2", (int64_t)1);
  s.implant_crowns = j.value("implant_crowns", (int64_t)0);
}

}  // namespace psat
