#include "psat/generator.hpp"

#include <cmath>

#include "psat/rng.hpp"

namespace psat {

std::string to_string(SampleMode m) {
  return m == SampleMode::uniform ? "uniform" : "planted";
}

SampleMode sample_mode_from_string(const std::string &s) {
  if (s == "uniform") return SampleMode::uniform;
  if (s == "planted") return SampleMode::planted;
  fail(errc::invalid_argument, "unknown sample mode: " + s);
}

static int64_t round_ties_up(double x) {
  return static_cast<int64_t>(std::floor(x + 0.5));
}

int64_t density_for_kappa(int32_t n, double kappa) {
  if (n < 3) fail(errc::invalid_argument, "density_for_kappa: n < 3");
  if (kappa < 0 || !std::isfinite(kappa))
    fail(errc::invalid_argument, "density_for_kappa: bad kappa");
  return round_ties_up(kappa * std::log(static_cast<double>(n)) * n);
}

void GeneratorSpec::validate() const {
  if (n < 3) fail(errc::invalid_argument, "generator spec: n < 3");
  int set = m.has_value() + kappa.has_value() + rho.has_value();
  if (set != 1)
    fail(errc::invalid_argument, "generator spec: exactly one of m/kappa/rho required");
  if (m && *m < 0) fail(errc::invalid_argument, "generator spec: m < 0");
  if (planted_assignment) {
    if (mode != SampleMode::planted)
      fail(errc::invalid_argument, "generator spec: planted_assignment in uniform mode");
    if (planted_assignment->size() != static_cast<size_t>(n))
      fail(errc::invalid_argument, "generator spec: planted_assignment length != n");
  }
}

int64_t GeneratorSpec::resolved_m() const {
  validate();
  if (m) return *m;
  if (kappa) return density_for_kappa(n, *kappa);
  if (*rho < 0 || !std::isfinite(*rho))
    fail(errc::invalid_argument, "generator spec: bad rho");
  return round_ties_up(*rho * n);
}

void to_json(nlohmann::json &j, const GeneratorSpec &spec) {
  j = nlohmann::json::object();
  j["n"] = spec.n;
  if (spec.m) j["m"] = *spec.m;
  if (spec.kappa) j["kappa"] = *spec.kappa;
  if (spec.rho) j["rho"] = *spec.rho;
  j["mode"] = to_string(spec.mode);
  if (spec.planted_assignment) {
    std::vector<int> bits(spec.planted_assignment->v.begin(),
                          spec.planted_assignment->v.end());
    j["planted_assignment"] = bits;
  }
  if (spec.seed) j["seed"] = *spec.seed;
}

void from_json(const nlohmann::json &j, GeneratorSpec &spec) {
  spec = GeneratorSpec{};
  spec.n = j.at("n").get<int32_t>();
  if (j.contains("m")) spec.m = j["m"].get<int64_t>();
  if (j.contains("kappa")) spec.kappa = j["kappa"].get<double>();
  if (j.contains("rho")) spec.rho = j["rho"].get<double>();
  if (j.contains("mode")) spec.mode = sample_mode_from_string(j["mode"].get<std::string>());
  if (j.contains("planted_assignment")) {
    auto bits = j["planted_assignment"].get<std::vector<int>>();
    Assignment a(bits.size());
    for (size_t i = 0; i < bits.size(); i++) a[i] = bits[i] ? 1 : 0;
    spec.planted_assignment = std::move(a);
  }
  if (j.contains("seed")) spec.seed = j["seed"].get<uint64_t>();
  spec.validate();
}

Formula sample(const GeneratorSpec &spec, uint64_t seed) {
  const int64_t m = spec.resolved_m();
  const int32_t n = spec.n;
  const bool planted = spec.mode == SampleMode::planted;
  Rng rng(seed);

  std::vector<Clause> clauses;
  clauses.reserve(m);
  for (int64_t i = 0; i < m; i++) {
    Var v0 = static_cast<Var>(rng.below(n));
    Var v1, v2;
    do v1 = static_cast<Var>(rng.below(n)); while (v1 == v0);
    do v2 = static_cast<Var>(rng.below(n)); while (v2 == v0 || v2 == v1);
    // canonical variable order before assigning sign bits so the sign
    // pattern is attached to the sorted triple
    if (v0 > v1) std::swap(v0, v1);
    if (v1 > v2) std::swap(v1, v2);
    if (v0 > v1) std::swap(v0, v1);

    uint64_t bits = rng.below(8);
    if (planted) {
      while (bits == 0) bits = rng.below(8);  // 0 = all-negative, falsified by all-ones
      if (spec.planted_assignment) {
        // sign-complement transport from the all-ones case
        const Assignment &u = *spec.planted_assignment;
        bits ^= (u[v0] ? 0 : 1) | (u[v1] ? 0 : 2) | (u[v2] ? 0 : 4);
      }
    }
    auto lit = [&](Var v, uint64_t bit) { return bit ? Lit::pos(v) : Lit::neg(v); };
    clauses.push_back(Clause{{lit(v0, bits & 1), lit(v1, bits & 2), lit(v2, bits & 4)}});
  }
  return Formula(n, std::move(clauses));
}

Formula sample_uniform(int32_t n, int64_t m, uint64_t seed) {
  GeneratorSpec spec;
  spec.n = n;
  spec.m = m;
  spec.mode = SampleMode::uniform;
  return sample(spec, seed);
}

Formula sample_planted(int32_t n, int64_t m, uint64_t seed,
                       const std::optional<Assignment> &planted) {
  GeneratorSpec spec;
  spec.n = n;
  spec.m = m;
  spec.mode = SampleMode::planted;
  spec.planted_assignment = planted;
  return sample(spec, seed);
}

Formula concat(const Formula &f1, const Formula &f2) {
  if (f1.n() != f2.n())
    fail(errc::invalid_argument, "concat: variable counts differ");
  std::vector<Clause> clauses = f1.clauses();
  clauses.insert(clauses.end(), f2.clauses().begin(), f2.clauses().end());
  return Formula(f1.n(), std::move(clauses));
}

Formula widen(const Formula &f, int32_t n_new) {
  if (n_new < f.n()) fail(errc::invalid_argument, "widen: n_new < n");
  return Formula(n_new, f.clauses());
}

}  // namespace psat
