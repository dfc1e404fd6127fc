#pragma once

// Structure census: primal-graph diagnostics, isolated variables, support
// clauses, caps, crowns, and the cap-expectation scaling formula.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "psat/cnf.hpp"

namespace psat {

// Variables adjacent iff they co-occur in some clause. CSR, sorted, no dups.
struct PrimalGraph {
  int32_t n = 0;
  std::vector<int64_t> offset;    // size n+1
  std::vector<int32_t> neighbor;  // concatenated sorted unique rows
  int64_t degree(int32_t x) const { return offset[x + 1] - offset[x]; }
};

PrimalGraph primal_graph(const Formula &f);
int64_t max_degree(const PrimalGraph &g);
// Average degree of the subgraph induced on `members` (distinct variables).
mpq_class avg_degree(const PrimalGraph &g, const std::vector<int32_t> &members);
// Hop count by BFS; -1 if unreachable.
int64_t distance(const PrimalGraph &g, int32_t x, int32_t y);

// cnt[x] = number of clause occurrences of type (+,-,-) whose positive
// literal is x. Duplicated clauses count once per occurrence.
std::vector<int64_t> pnn_positive_counts(const Formula &f);
bool is_k_isolated(const Formula &f, int32_t x, int64_t k);

// Positions of clauses satisfied under a solely by the literal ~x.
// Contract: a[x] == 0.
std::vector<int64_t> support_clauses(const Formula &f, const Assignment &a, int32_t x);

// c1 = (x1 | ~x2 | ~x3) at c1_pos, c2 = (~x1 | ~x4 | x5) at c2_pos.
// x1's and x5's sole PNN-positive occurrences are c1 resp. c2; x2 and x3
// each have at least one PNN-positive occurrence; all five vars distinct.
struct Cap {
  int32_t x1, x2, x3, x4, x5;
  int64_t c1_pos, c2_pos;
};

std::vector<Cap> find_caps(const Formula &f);
int64_t count_caps(const Formula &f);

// rho^4 * n^(1 - (6/7) rho / ln n): asymptotic order only; scaling checks.
double expected_caps_asymptotic(int64_t n, double rho);

// Central clause (x[0] | x[1] | x[2]) plus supports (~x[i] | p | q); the nine
// variables occur nowhere outside the four clauses. pos = {central, support
// of x[0], of x[1], of x[2]}; x[3..4], x[5..6], x[7..8] are the support legs.
struct Crown {
  std::array<int32_t, 9> x;
  std::array<int64_t, 4> pos;
};

std::vector<Crown> find_crowns(const Formula &f);
int64_t count_crowns(const Formula &f);

// All-ones except the cap's x1 and x5 zeroed: flipping x1 trades its central
// clause against c2's support, every other flip is non-improving, so the
// assignment is a proper local minimum whenever the cap's neighborhood is
// clean (see tests).
Assignment cap_minimum_assignment(const Formula &f, const Cap &cap);

// Pairs (x, y), x < y, of d1-isolated variables with graph distance <= d2.
std::vector<std::pair<int32_t, int32_t>> isolation_pair_scan(const Formula &f,
                                                             int64_t d1, int64_t d2);

// The four crown clauses on variables base..base+8.
std::vector<Clause> make_crown_clauses(int32_t base);

nlohmann::ordered_json census_json(const Formula &f, bool include_structures,
                                   std::optional<std::pair<int64_t, int64_t>> isolation = {});

}  // namespace psat
