#pragma once

// Brute-force ground truth at desk scale: exact MAX-SAT optimum, exhaustive
// local-minima classification, and exact rational probabilities for clause
// satisfaction and cap/crown expectations.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "psat/cnf.hpp"
#include "psat/generator.hpp"

namespace psat {

struct OptResult {
  int64_t opt = 0;
  Assignment witness;
};

// Exhaustive over all 2^n assignments (Gray-code walk). Hard guard n <= 24.
OptResult brute_force_opt(const Formula &f);

enum class MinimumClass { not_minimum, global_minimum, proper_local_minimum };

// proper_local_minimum: no improving flip and at least one unsatisfied
// clause; global_minimum: satisfying (trivially flip-free); else not_minimum.
MinimumClass classify_assignment(const Formula &f, const Assignment &a);

struct MinimaCensus {
  int64_t opt = 0;
  int64_t not_minimum = 0;
  int64_t global_minimum = 0;
  int64_t proper_local_minimum = 0;
  std::vector<int64_t> proper_ones_histogram;  // index = ones-count, size n+1
};

// Exhaustive classification of every assignment. Hard guard n <= 20.
MinimaCensus enumerate_minima(const Formula &f);

nlohmann::ordered_json minima_census_json(const MinimaCensus &c);

// Probability that one clause drawn from the planted law (7 C(n,3)
// equiprobable sign-triples) is satisfied by an assignment with q*n zeros.
// Closed form for any n; the enumeration mode recounts all clauses (n <= 12).
// Both are exact rationals and must agree exactly.
mpq_class clause_sat_probability(int32_t n, const mpq_class &q);
mpq_class clause_sat_probability_enum(int32_t n, const mpq_class &q);

// Exact E[count_caps] / E[count_crowns] for a formula of m i.i.d. clauses
// drawn uniformly (8 C(n,3) clauses) or planted (7 C(n,3)).
mpq_class cap_probability(int32_t n, int64_t m, SampleMode mode);
mpq_class crown_probability(int32_t n, int64_t m, SampleMode mode);

}  // namespace psat
