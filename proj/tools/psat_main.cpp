// psat: command-line front end over the plantedsat C API.
//
// Exit codes: 0 success, 1 usage or malformed input, 2 I/O failure,
// 3 internal invariant violation.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plantedsat.h"

namespace {

struct Owned {
  char *p = nullptr;
  ~Owned() { psat_free_string(p); }
};

int exit_for(int status) {
  switch (status) {
    case PSAT_OK: return 0;
    case PSAT_EIO: return 2;
    case PSAT_EINTERNAL: return 3;
    default: return 1;  // EINVAL, EPARSE, ELIMIT: bad request or bad input
  }
}

int complain(int status) {
  std::fprintf(stderr, "psat: %s\n", psat_last_error());
  return exit_for(status);
}

// out empty = stdout; a trailing newline is guaranteed either way
int emit(const std::string &text, const std::string &out) {
  const bool nl = text.empty() || text.back() != '\n';
  if (out.empty()) {
    std::fputs(text.c_str(), stdout);
    if (nl) std::fputc('\n', stdout);
    return 0;
  }
  std::ofstream f(out, std::ios::trunc);
  f << text;
  if (nl) f << '\n';
  if (!f) {
    std::fprintf(stderr, "psat: cannot write %s\n", out.c_str());
    return 2;
  }
  return 0;
}

std::string pretty(const char *json_text) {
  return nlohmann::ordered_json::parse(json_text).dump(2);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"planted 3-SAT local-search laboratory"};
  app.require_subcommand(1);

  uint64_t seed = 0;
  std::string out, format = "csv", config;
  int32_t threads = 1;
  auto *opt_seed = app.add_option("--seed", seed, "RNG seed (sweep: base seed)");
  app.add_option("--out", out, "output file (default stdout; sweep: the record file)");
  app.add_option("--format", format, "sweep record format")
      ->check(CLI::IsMember({"csv", "json"}));
  auto *opt_threads =
      app.add_option("--threads", threads, "sweep worker threads")->check(CLI::PositiveNumber);
  app.add_option("--config", config, "sweep spec as a JSON file");

  auto *gen = app.add_subcommand("generate", "sample a random formula and emit DIMACS");
  gen->fallthrough();
  int32_t g_n = 0;
  int64_t g_m = 0;
  double g_kappa = 0, g_rho = 0;
  std::string g_mode = "uniform";
  gen->add_option("--n", g_n, "variable count")->required();
  auto *opt_m = gen->add_option("--m", g_m, "clause count");
  auto *opt_kappa = gen->add_option("--kappa", g_kappa, "density: m = round(kappa n ln n)");
  auto *opt_rho = gen->add_option("--rho", g_rho, "density: m = round(rho n)");
  gen->add_option("--mode", g_mode, "uniform or planted")
      ->check(CLI::IsMember({"uniform", "planted"}));

  auto *solve = app.add_subcommand("solve", "run one solver on a DIMACS file, print the trace");
  solve->fallthrough();
  std::string s_file, s_solver = "LS", s_initial;
  int64_t s_budget = -1;
  bool s_full = false;
  solve->add_option("--file", s_file, "input DIMACS file")->required();
  solve->add_option("--solver", s_solver, "LS, MLS or SD")
      ->check(CLI::IsMember({"LS", "MLS", "SD"}));
  auto *opt_initial =
      solve->add_option("--initial", s_initial, "initial assignment as 0/1 string");
  solve->add_option("--budget", s_budget, "step budget (-1 = default valve)");
  solve->add_flag("--full", s_full, "include per-step records in the trace");

  auto *census = app.add_subcommand("census", "count structures in a DIMACS file");
  census->fallthrough();
  std::string c_file;
  bool c_structures = false;
  int64_t c_d1 = 0, c_d2 = 0;
  census->add_option("--file", c_file, "input DIMACS file")->required();
  census->add_flag("--structures", c_structures, "list cap/crown witnesses");
  census->add_option("--d1", c_d1, "isolation radius (with --d2 enables the pair scan)");
  census->add_option("--d2", c_d2, "isolation pair distance bound");

  auto *verify = app.add_subcommand("verify", "exact oracle: OPT and minima census (small n)");
  verify->fallthrough();
  std::string v_file;
  verify->add_option("--file", v_file, "input DIMACS file")->required();

  auto *sweep = app.add_subcommand("sweep", "run an experiment grid, stream records to --out");
  sweep->fallthrough();
  std::string w_kind, w_mode, w_solver;
  std::vector<int32_t> w_n;
  std::vector<double> w_kappa, w_rho;
  std::vector<int64_t> w_m;
  int64_t w_trials = 0;
  bool w_resume = false;
  auto *opt_w_kind = sweep->add_option("--kind", w_kind, "experiment kind");
  auto *opt_w_n = sweep->add_option("--n", w_n, "n grid");
  auto *opt_w_kappa = sweep->add_option("--kappa", w_kappa, "kappa grid");
  auto *opt_w_rho = sweep->add_option("--rho", w_rho, "rho grid");
  auto *opt_w_m = sweep->add_option("--m", w_m, "m grid");
  auto *opt_w_trials = sweep->add_option("--trials", w_trials, "trials per cell");
  auto *opt_w_mode = sweep->add_option("--mode", w_mode, "uniform or planted")
                         ->check(CLI::IsMember({"uniform", "planted"}));
  auto *opt_w_solver =
      sweep->add_option("--solver", w_solver, "LS, MLS or SD")
          ->check(CLI::IsMember({"LS", "MLS", "SD"}));
  sweep->add_flag("--resume", w_resume, "keep whole cells already in --out");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (gen->parsed()) {
    nlohmann::json spec{{"n", g_n}, {"mode", g_mode}};
    if (*opt_m) spec["m"] = g_m;
    if (*opt_kappa) spec["kappa"] = g_kappa;
    if (*opt_rho) spec["rho"] = g_rho;
    psat_formula *f = nullptr;
    int rc = psat_formula_generate(spec.dump().c_str(), seed, &f);
    if (rc != PSAT_OK) return complain(rc);
    Owned text;
    rc = psat_formula_dimacs(f, &text.p);
    psat_formula_free(f);
    if (rc != PSAT_OK) return complain(rc);
    return emit(text.p, out);
  }

  if (solve->parsed()) {
    psat_formula *f = nullptr;
    int rc = psat_formula_read_dimacs(s_file.c_str(), &f);
    if (rc != PSAT_OK) return complain(rc);
    psat_trace *t = nullptr;
    rc = psat_solve(f, s_solver.c_str(), *opt_initial ? s_initial.c_str() : nullptr, seed,
                    s_budget, s_full ? 1 : 0, &t);
    psat_formula_free(f);
    if (rc != PSAT_OK) return complain(rc);
    Owned js;
    rc = psat_trace_json(t, s_full ? 1 : 0, &js.p);
    psat_trace_free(t);
    if (rc != PSAT_OK) return complain(rc);
    return emit(pretty(js.p), out);
  }

  if (census->parsed()) {
    psat_formula *f = nullptr;
    int rc = psat_formula_read_dimacs(c_file.c_str(), &f);
    if (rc != PSAT_OK) return complain(rc);
    Owned js;
    rc = psat_census(f, c_structures ? 1 : 0, c_d1, c_d2, &js.p);
    psat_formula_free(f);
    if (rc != PSAT_OK) return complain(rc);
    return emit(pretty(js.p), out);
  }

  if (verify->parsed()) {
    psat_formula *f = nullptr;
    int rc = psat_formula_read_dimacs(v_file.c_str(), &f);
    if (rc != PSAT_OK) return complain(rc);
    Owned js;
    rc = psat_verify(f, &js.p);
    psat_formula_free(f);
    if (rc != PSAT_OK) return complain(rc);
    return emit(pretty(js.p), out);
  }

  // sweep: config file first, explicit flags override
  nlohmann::json spec = nlohmann::json::object();
  if (!config.empty()) {
    std::ifstream in(config);
    if (!in) {
      std::fprintf(stderr, "psat: cannot read %s\n", config.c_str());
      return 2;
    }
    try {
      in >> spec;
    } catch (const nlohmann::json::exception &e) {
      std::fprintf(stderr, "psat: %s: %s\n", config.c_str(), e.what());
      return 1;
    }
  }
  if (*opt_w_kind) spec["kind"] = w_kind;
  if (*opt_w_n) spec["n_grid"] = w_n;
  if (*opt_w_kappa) spec["kappa_grid"] = w_kappa;
  if (*opt_w_rho) spec["rho_grid"] = w_rho;
  if (*opt_w_m) spec["m_grid"] = w_m;
  if (*opt_w_trials) spec["trials"] = w_trials;
  if (*opt_w_mode) spec["mode"] = w_mode;
  if (*opt_w_solver) spec["solver"] = w_solver;
  if (*opt_seed) spec["base_seed"] = seed;
  if (*opt_threads) spec["threads"] = threads;
  if (out.empty()) {
    std::fprintf(stderr, "psat: sweep needs --out for the record file\n");
    return 1;
  }
  Owned summary;
  const int rc =
      psat_sweep(spec.dump().c_str(), out.c_str(), format.c_str(), w_resume ? 1 : 0, &summary.p);
  if (rc != PSAT_OK) return complain(rc);
  std::fputs(pretty(summary.p).c_str(), stdout);
  std::fputc('\n', stdout);
  return 0;
}
