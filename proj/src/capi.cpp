#include "plantedsat.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "psat/census.hpp"
#include "psat/cnf.hpp"
#include "psat/dimacs.hpp"
#include "psat/error.hpp"
#include "psat/experiment.hpp"
#include "psat/generator.hpp"
#include "psat/oracle.hpp"
#include "psat/solver.hpp"

using namespace psat;

struct psat_formula {
  Formula f;
};

struct psat_trace {
  RunTrace t;
};

namespace {

thread_local std::string g_last_error;

int set_error(int code, const std::string &what) {
  g_last_error = what;
  return code;
}

int from_errc(const error &e) {
  switch (e.code()) {
    case errc::invalid_argument: return PSAT_EINVAL;
    case errc::parse: return PSAT_EPARSE;
    case errc::io: return PSAT_EIO;
    case errc::limit: return PSAT_ELIMIT;
    case errc::internal: return PSAT_EINTERNAL;
  }
  return PSAT_EINTERNAL;
}

// Every entry point funnels through here: exceptions become status codes.
template <typename Fn>
int guarded(Fn &&fn) {
  try {
    fn();
    g_last_error.clear();
    return PSAT_OK;
  } catch (const error &e) {
    return set_error(from_errc(e), e.what());
  } catch (const nlohmann::json::exception &e) {
    return set_error(PSAT_EPARSE, e.what());
  } catch (const std::bad_alloc &) {
    return set_error(PSAT_EINTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return set_error(PSAT_EINTERNAL, e.what());
  }
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc{};
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char *what) {
  if (!ok) fail(errc::invalid_argument, what);
}

Assignment parse_bits(const char *bits, int32_t n) {
  require(bits != nullptr, "assignment string is null");
  const size_t len = std::strlen(bits);
  if ((int64_t)len != n) fail(errc::invalid_argument, "assignment length does not match n");
  Assignment a(len);
  for (size_t i = 0; i < len; i++) {
    if (bits[i] != '0' && bits[i] != '1')
      fail(errc::invalid_argument, "assignment characters must be 0 or 1");
    a.v[i] = bits[i] == '1';
  }
  return a;
}

std::optional<Assignment> parse_optional_bits(const char *bits, int32_t n) {
  if (!bits) return std::nullopt;
  return parse_bits(bits, n);
}

}  // namespace

extern "C" {

const char *psat_version(void) { return "1.0.0"; }

const char *psat_last_error(void) { return g_last_error.c_str(); }

void psat_free_string(char *s) { std::free(s); }

int psat_formula_generate(const char *spec_json, uint64_t seed, psat_formula **out) {
  return guarded([&] {
    require(spec_json && out, "null argument");
    GeneratorSpec spec = nlohmann::json::parse(spec_json).get<GeneratorSpec>();
    *out = new psat_formula{sample(spec, seed)};
  });
}

int psat_formula_parse_dimacs(const char *text, psat_formula **out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new psat_formula{dimacs_read(std::string(text))};
  });
}

int psat_formula_read_dimacs(const char *path, psat_formula **out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new psat_formula{dimacs_read_file(path)};
  });
}

int psat_formula_dimacs(const psat_formula *f, char **text_out) {
  return guarded([&] {
    require(f && text_out, "null argument");
    *text_out = dup_string(dimacs_write(f->f));
  });
}

int psat_formula_write_dimacs(const psat_formula *f, const char *path) {
  return guarded([&] {
    require(f && path, "null argument");
    dimacs_write_file(f->f, path);
  });
}

int psat_formula_n(const psat_formula *f, int32_t *n_out) {
  return guarded([&] {
    require(f && n_out, "null argument");
    *n_out = f->f.n();
  });
}

int psat_formula_m(const psat_formula *f, int64_t *m_out) {
  return guarded([&] {
    require(f && m_out, "null argument");
    *m_out = f->f.m();
  });
}

int psat_formula_eval(const psat_formula *f, const char *bits, char **json_out) {
  return guarded([&] {
    require(f && json_out, "null argument");
    const Assignment a = parse_bits(bits, f->f.n());
    nlohmann::ordered_json j;
    j["sat"] = sat_count(f->f, a);
    j["unsat"] = unsat_count(f->f, a);
    j["ones"] = ones_count(a);
    j["improving"] = improving_set(f->f, a);
    *json_out = dup_string(j.dump());
  });
}

void psat_formula_free(psat_formula *f) { delete f; }

int psat_solve(const psat_formula *f, const char *solver, const char *initial_bits,
               uint64_t seed, int64_t step_budget, int record_steps, psat_trace **out) {
  return guarded([&] {
    require(f && solver && out, "null argument");
    auto initial = parse_optional_bits(initial_bits, f->f.n());
    const std::string kind = solver;
    RunTrace trace;
    if (kind == "LS")
      trace = local_search(f->f, std::move(initial), seed, step_budget, record_steps != 0);
    else if (kind == "MLS")
      trace = modified_local_search(f->f, std::move(initial), seed, step_budget,
                                    record_steps != 0);
    else if (kind == "SD")
      trace = straight_descent(f->f, std::move(initial), seed, record_steps != 0);
    else
      fail(errc::invalid_argument, "solver must be LS, MLS or SD");
    *out = new psat_trace{std::move(trace)};
  });
}

int psat_trace_json(const psat_trace *t, int full, char **json_out) {
  return guarded([&] {
    require(t && json_out, "null argument");
    *json_out = dup_string(trace_json(t->t, full != 0).dump());
  });
}

void psat_trace_free(psat_trace *t) { delete t; }

int psat_coupled_run(const psat_formula *f, const char *initial_bits, uint64_t seed,
                     int full, char **json_out) {
  return guarded([&] {
    require(f && json_out, "null argument");
    auto initial = parse_optional_bits(initial_bits, f->f.n());
    *json_out = dup_string(coupled_json(coupled_run(f->f, std::move(initial), seed),
                                        full != 0).dump());
  });
}

int psat_uniformity_probe(int32_t n, int32_t m0, int64_t t, int64_t trials,
                          uint64_t seed, char **json_out) {
  return guarded([&] {
    require(json_out != nullptr, "null argument");
    const UniformityTable table = uniformity_probe(n, m0, t, trials, seed);
    nlohmann::ordered_json j;
    j["n"] = table.n;
    j["m0"] = table.m0;
    j["t"] = table.t;
    j["trials"] = table.trials;
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto &cls : table.classes) {
      nlohmann::ordered_json c;
      c["ones"] = cls.ones;
      c["pattern"] = cls.pattern;
      c["count"] = cls.count;
      j["classes"].push_back(std::move(c));
    }
    *json_out = dup_string(j.dump());
  });
}

int psat_census(const psat_formula *f, int include_structures, int64_t d1, int64_t d2,
                char **json_out) {
  return guarded([&] {
    require(f && json_out, "null argument");
    std::optional<std::pair<int64_t, int64_t>> isolation;
    if (d1 > 0 && d2 > 0) isolation = {d1, d2};
    *json_out = dup_string(census_json(f->f, include_structures != 0, isolation).dump());
  });
}

int psat_verify(const psat_formula *f, char **json_out) {
  return guarded([&] {
    require(f && json_out, "null argument");
    const nlohmann::ordered_json census = minima_census_json(enumerate_minima(f->f));
    nlohmann::ordered_json j;
    j["n"] = f->f.n();
    j["m"] = f->f.m();
    for (const auto &[key, value] : census.items()) j[key] = value;
    *json_out = dup_string(j.dump());
  });
}

int psat_structure_expectations(int32_t n, int64_t m, const char *mode, char **json_out) {
  return guarded([&] {
    require(mode && json_out, "null argument");
    const SampleMode sm = sample_mode_from_string(mode);
    const mpq_class caps = cap_probability(n, m, sm);
    const mpq_class crowns = crown_probability(n, m, sm);
    nlohmann::ordered_json j;
    j["n"] = n;
    j["m"] = m;
    j["mode"] = to_string(sm);
    j["expected_caps"] = caps.get_d();
    j["expected_caps_exact"] = caps.get_str();
    j["expected_crowns"] = crowns.get_d();
    j["expected_crowns_exact"] = crowns.get_str();
    *json_out = dup_string(j.dump());
  });
}

int psat_sweep(const char *spec_json, const char *path, const char *format, int resume,
               char **summary_json_out) {
  return guarded([&] {
    require(spec_json && path && format && summary_json_out, "null argument");
    ExperimentSpec spec = nlohmann::json::parse(spec_json).get<ExperimentSpec>();
    const SweepResult r = run_sweep(spec, path, format, resume != 0);
    nlohmann::ordered_json j;
    j["cells"] = r.cells;
    j["records_total"] = r.records_total;
    j["records_written"] = r.records_written;
    j["records_reused"] = r.records_reused;
    *summary_json_out = dup_string(j.dump());
  });
}

int psat_sweep_columns(const char *kind, char **header_out) {
  return guarded([&] {
    require(kind && header_out, "null argument");
    *header_out = dup_string(record_csv_header(experiment_kind_from_string(kind)));
  });
}

}  // extern "C"
