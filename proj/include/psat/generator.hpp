#pragma once

// Seeded samplers for the uniform law over all 8*C(n,3) width-3 clauses and
// the planted law over the 7*C(n,3) clauses satisfied by a planted assignment,
// plus formula concatenation for semi-random composition.
//
// Clauses are drawn i.i.d. with replacement: variables by rejection until
// distinct, sign pattern uniform over the allowed patterns (planted mode
// rejects the pattern falsified by the planted assignment).

#include <cstdint>
#include <optional>
#include <string>

#include "psat/cnf.hpp"

#include "json.hpp"

namespace psat {

enum class SampleMode { uniform, planted };

std::string to_string(SampleMode m);
SampleMode sample_mode_from_string(const std::string &s);

struct GeneratorSpec {
  int32_t n = 0;
  // Exactly one of m / kappa / rho must be set: m directly, m = round(kappa*n*ln n),
  // or m = round(rho*n). Rounding is nearest, ties up.
  std::optional<int64_t> m;
  std::optional<double> kappa;
  std::optional<double> rho;
  SampleMode mode = SampleMode::uniform;
  std::optional<Assignment> planted_assignment;  // planted mode only; default all-ones
  std::optional<uint64_t> seed;                  // carried by JSON configs

  int64_t resolved_m() const;  // validates and resolves the clause count
  void validate() const;
};

void to_json(nlohmann::json &j, const GeneratorSpec &spec);
void from_json(const nlohmann::json &j, GeneratorSpec &spec);

int64_t density_for_kappa(int32_t n, double kappa);

Formula sample(const GeneratorSpec &spec, uint64_t seed);
Formula sample_uniform(int32_t n, int64_t m, uint64_t seed);
Formula sample_planted(int32_t n, int64_t m, uint64_t seed,
                       const std::optional<Assignment> &planted = std::nullopt);

// Clause sequence of f1 followed by f2; both over the same n.
Formula concat(const Formula &f1, const Formula &f2);

// Same clauses, declared over a larger variable universe.
Formula widen(const Formula &f, int32_t n_new);

}  // namespace psat
