#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "psat/census.hpp"
#include "psat/generator.hpp"
#include "psat/oracle.hpp"
#include "psat/rng.hpp"
#include "psat/solver.hpp"
#include "psat/stats.hpp"
#include "test_util.hpp"

using namespace psat;
using namespace psat_test;

namespace {

Clause C(int a, int b, int c) {
  auto lit = [](int s) { return s > 0 ? Lit::pos(s - 1) : Lit::neg(-s - 1); };
  return make_clause(lit(a), lit(b), lit(c));
}

// Re-simulate a trace from its initial assignment, checking every recorded
// step against the brute-force vote semantics.
void replay_and_check(const Formula &f, const RunTrace &t) {
  Assignment a = t.initial;
  int64_t sat = brute_sat_count(f, a);
  int64_t flips = 0;
  for (const Step &s : t.steps) {
    const VoteTally votes = compute_votes(f, a);
    const Var x = s.considered_variable;
    CHECK(s.righteous_margin == votes.to_one[x] - votes.to_zero[x]);
    if (s.flipped) {
      a.flip(x);
      const int64_t now = brute_sat_count(f, a);
      if (t.kind != SolverKind::SD) CHECK(now > sat);  // LS monotonicity
      sat = now;
      flips++;
    } else {
      CHECK(t.kind != SolverKind::LS);  // LS only records flips
      if (t.kind == SolverKind::MLS) CHECK(brute_flip_delta(f, a, x) <= 0);
    }
  }
  CHECK(flips == t.flips);
  CHECK(a == t.final);
}

// n=3 fixture whose every variable keeps a strictly positive vote margin at
// both assignments a coupled run started from (0,1,1) can visit.
Formula righteous_fixture() {
  return Formula(3, {C(1, -2, -3), C(1, 2, -3), C(1, 2, -3), C(1, -2, 3), C(1, -2, 3),
                     C(2, -1, -3), C(3, -1, -2)});
}

}  // namespace

TEST_CASE("local search on a single clause") {
  Formula f(3, {C(1, 2, 3)});
  auto t = local_search(f, Assignment(3, 0), 1);
  CHECK(t.status == RunStatus::satisfied);
  CHECK(t.flips == 1);
  CHECK(t.steps_taken == 1);
  CHECK(sat_count(f, t.final) == 1);
  replay_and_check(f, t);
}

TEST_CASE("local search is trapped by the crown") {
  Formula f(9, make_crown_clauses(0));
  for (uint64_t seed = 0; seed < 20; seed++) {
    auto t = local_search(f, Assignment(9, 0), seed);
    CHECK(t.status == RunStatus::proper_local_minimum);
    CHECK(t.flips == 0);
    CHECK(t.final == Assignment(9, 0));
  }
}

TEST_CASE("satisfying initial assignment means zero steps") {
  Formula f = sample_planted(12, 30, 5);
  auto t = local_search(f, Assignment(12, 1), 3);
  CHECK(t.status == RunStatus::satisfied);
  CHECK(t.steps_taken == 0);
  auto t2 = modified_local_search(f, Assignment(12, 1), 3);
  CHECK(t2.status == RunStatus::satisfied);
  CHECK(t2.steps_taken == 0);
}

TEST_CASE("traces replay exactly against brute-force semantics") {
  for (uint64_t seed = 0; seed < 15; seed++) {
    Formula f = seed % 2 ? sample_planted(8, 20, derive_stream(7, seed))
                         : sample_uniform(8, 20, derive_stream(8, seed));
    auto ls = local_search(f, std::nullopt, derive_stream(9, seed));
    replay_and_check(f, ls);
    auto mls = modified_local_search(f, std::nullopt, derive_stream(10, seed));
    replay_and_check(f, mls);
    CHECK(mls.steps_taken >= mls.flips);
  }
  for (uint64_t seed = 0; seed < 10; seed++) {
    Formula f = sample_planted(9, 18, derive_stream(11, seed));
    auto sd = straight_descent(f, std::nullopt, derive_stream(12, seed));
    replay_and_check(f, sd);
  }
}

TEST_CASE("same seed reproduces the same trace") {
  Formula f = sample_planted(30, 120, 77);
  auto a = local_search(f, std::nullopt, 5);
  auto b = local_search(f, std::nullopt, 5);
  CHECK(a.initial == b.initial);
  CHECK(a.final == b.final);
  CHECK(a.steps_taken == b.steps_taken);
  REQUIRE(a.steps.size() == b.steps.size());
  for (size_t i = 0; i < a.steps.size(); i++) {
    CHECK(a.steps[i].considered_variable == b.steps[i].considered_variable);
    CHECK(a.steps[i].righteous_margin == b.steps[i].righteous_margin);
  }
  auto c = local_search(f, std::nullopt, 6);
  CHECK(a.initial != c.initial);  // different stream, different start
}

TEST_CASE("terminated runs end in genuine minima, never not_minimum") {
  int proper_seen = 0, satisfied_seen = 0;
  for (uint64_t seed = 0; seed < 60; seed++) {
    const int32_t n = 3 + (int32_t)(seed % 14);  // 3..16
    const int64_t m = 3 * n;
    Formula f = seed % 2 ? sample_planted(n, m, derive_stream(21, seed))
                         : sample_uniform(n, m, derive_stream(22, seed));
    for (auto t : {local_search(f, std::nullopt, derive_stream(23, seed)),
                   modified_local_search(f, std::nullopt, derive_stream(24, seed))}) {
      REQUIRE(t.status != RunStatus::step_budget_exhausted);
      CHECK(classify_assignment(f, t.final) != MinimumClass::not_minimum);
      if (t.status == RunStatus::satisfied) {
        CHECK(classify_assignment(f, t.final) == MinimumClass::global_minimum);
        satisfied_seen++;
      } else {
        CHECK(classify_assignment(f, t.final) == MinimumClass::proper_local_minimum);
        CHECK(is_proper_local_minimum(f, t.final));
        proper_seen++;
      }
    }
  }
  CHECK(satisfied_seen > 0);
  CHECK(proper_seen > 0);  // 3n clauses on uniform instances trap some runs
}

TEST_CASE("budget exhaustion is a status, not an exception") {
  Formula f(3, {C(1, 2, 3)});
  auto t = local_search(f, Assignment(3, 0), 1, 0);
  CHECK(t.status == RunStatus::step_budget_exhausted);
  CHECK(t.steps_taken == 0);
  Formula big = sample_uniform(40, 400, 3);
  auto m = modified_local_search(big, Assignment(40, 0), 1, 5);
  if (m.status == RunStatus::step_budget_exhausted) CHECK(m.steps_taken == 5);
  CHECK(default_ls_budget(big) == 400 * 40);
  CHECK(default_mls_budget(big) ==
        (int64_t)std::ceil(4.0 * 40 * std::log(40.0) * 401));
}

TEST_CASE("LS and MLS share one reachability graph and one terminal set") {
  Formula f = sample_uniform(6, 14, 404);
  const Assignment start(6, 0);

  // successor sets from the library improving set vs per-variable deltas
  std::set<uint64_t> terminals;
  std::vector<uint64_t> queue{0};
  std::set<uint64_t> seen{0};
  while (!queue.empty()) {
    const uint64_t bits = queue.back();
    queue.pop_back();
    Assignment a = assignment_from_bits(6, bits);
    std::set<uint64_t> ls_next, mls_next;
    for (Var x : improving_set(f, a)) ls_next.insert(bits ^ (1ull << x));
    for (Var x = 0; x < 6; x++)
      if (brute_flip_delta(f, a, x) > 0) mls_next.insert(bits ^ (1ull << x));
    CHECK(ls_next == mls_next);
    if (ls_next.empty()) terminals.insert(bits);
    for (uint64_t nxt : ls_next)
      if (seen.insert(nxt).second) queue.push_back(nxt);
  }

  std::set<uint64_t> ls_finals, mls_finals;
  for (uint64_t seed = 0; seed < 400; seed++) {
    auto t = local_search(f, start, derive_stream(500, seed), -1, false);
    REQUIRE(t.status != RunStatus::step_budget_exhausted);
    ls_finals.insert(bits_from_assignment(t.final));
    auto u = modified_local_search(f, start, derive_stream(600, seed), -1, false);
    REQUIRE(u.status != RunStatus::step_budget_exhausted);
    mls_finals.insert(bits_from_assignment(u.final));
  }
  for (uint64_t b : ls_finals) CHECK(terminals.count(b) == 1);
  for (uint64_t b : mls_finals) CHECK(terminals.count(b) == 1);
  CHECK(ls_finals == mls_finals);
}

TEST_CASE("straight descent basics") {
  Formula f = sample_planted(10, 20, 3);
  auto t = straight_descent(f, Assignment(10, 1), 1);
  CHECK(t.status == RunStatus::satisfied);
  CHECK(t.steps_taken == 0);
  CHECK(t.final == Assignment(10, 1));

  Assignment one_zero(10, 1);
  one_zero.v[4] = 0;
  auto u = straight_descent(f, one_zero, 2);
  CHECK(u.flips == 1);
  CHECK(u.final == Assignment(10, 1));
  CHECK(u.steps.back().flipped);
  CHECK(u.steps.back().considered_variable == 4);
}

TEST_CASE("straight descent rejects formulas all-ones does not satisfy") {
  Formula bad(4, {C(1, 2, 3), C(-1, -2, -4)});
  CHECK_THROWS_AS(straight_descent(bad, std::nullopt, 1), error);
  CHECK_THROWS_AS(coupled_run(bad, std::nullopt, 1), error);
}

TEST_CASE("straight descent never reads the clauses") {
  Formula f1 = sample_planted(50, 300, 1);
  Formula f2 = sample_planted(50, 40, 2);
  Assignment init(50, 0);
  auto a = straight_descent(f1, init, 9);
  auto b = straight_descent(f2, init, 9);
  CHECK(a.steps_taken == b.steps_taken);
  CHECK(a.final == b.final);
  REQUIRE(a.steps.size() == b.steps.size());
  for (size_t i = 0; i < a.steps.size(); i++) {
    CHECK(a.steps[i].considered_variable == b.steps[i].considered_variable);
    CHECK(a.steps[i].flipped == b.steps[i].flipped);
  }
}

TEST_CASE("straight descent from one zero takes n picks on average") {
  const int32_t n = 100;
  Formula f = sample_planted(n, 50, 8);
  double total = 0;
  const int trials = 10000;
  for (int i = 0; i < trials; i++) {
    Assignment init(n, 1);
    init.v[i % n] = 0;
    total += (double)straight_descent(f, init, derive_stream(700, i), false).steps_taken;
  }
  const double mean = total / trials;
  CHECK(std::abs(mean - n) < 0.05 * n);
}

TEST_CASE("straight descent finishes within 2 n ln n picks almost always") {
  const int32_t n = 1000;
  Formula f = sample_planted(n, 100, 4);
  const double bound = 2.0 * n * std::log((double)n);
  int within = 0;
  const int trials = 300;
  for (int i = 0; i < trials; i++) {
    auto t = straight_descent(f, std::nullopt, derive_stream(800, i), false);
    CHECK(t.status == RunStatus::satisfied);
    if ((double)t.steps_taken <= bound) within++;
  }
  CHECK(within >= (int)(0.99 * trials));
}

TEST_CASE("coupled run from all-ones never moves") {
  Formula f = sample_planted(12, 40, 6);
  auto t = coupled_run(f, Assignment(12, 1), 3);
  CHECK(t.steps_taken == 0);
  CHECK(t.terminal_distance == 0);
  CHECK(t.sd_status == RunStatus::satisfied);
  CHECK(t.ls_status == RunStatus::satisfied);
}

TEST_CASE("coupled run stays glued when every variable is 1-righteous") {
  Formula f = righteous_fixture();
  Assignment start(3, 1);
  start.v[0] = 0;
  for (const Assignment &a : {start, Assignment(3, 1)}) {
    const VoteTally v = compute_votes(f, a);
    for (Var x = 0; x < 3; x++) REQUIRE(v.to_one[x] - v.to_zero[x] >= 1);
  }
  for (uint64_t seed = 0; seed < 200; seed++) {
    auto t = coupled_run(f, start, seed);
    CHECK(t.terminal_distance == 0);
    CHECK(t.sd_final == Assignment(3, 1));
    CHECK(t.ls_final == Assignment(3, 1));
    for (int64_t d : t.distance) CHECK(d == 0);
  }
}

TEST_CASE("coupled distance moves by at most one per shared step") {
  for (uint64_t seed = 0; seed < 12; seed++) {
    Formula f = sample_planted(40, 5 * 40, derive_stream(900, seed));
    auto t = coupled_run(f, std::nullopt, derive_stream(901, seed));
    CHECK(t.sd_status == RunStatus::satisfied);
    int64_t prev = 0;
    for (int64_t d : t.distance) {
      CHECK(std::abs(d - prev) <= 1);
      prev = d;
    }
    CHECK(t.terminal_distance == hamming(t.sd_final, t.ls_final));
    CHECK(t.sd_final == Assignment(40, 1));
  }
}

TEST_CASE("uniformity probe degenerate classes") {
  auto all_ones = uniformity_probe(6, 6, 5, 500, 1);
  REQUIRE(all_ones.classes.size() == 1);
  CHECK(all_ones.classes[0].ones == 6);
  CHECK(all_ones.classes[0].pattern.size() == 1);
  CHECK(all_ones.classes[0].count[0] == 500);

  auto t0 = uniformity_probe(6, 2, 0, 60000, 2);
  REQUIRE(t0.classes.size() == 1);
  CHECK(t0.classes[0].ones == 2);
  REQUIRE(t0.classes[0].pattern.size() == 15);
  uint64_t total = 0;
  for (uint64_t c : t0.classes[0].count) total += c;
  CHECK(total == 60000);
  CHECK(chi_square_uniform(t0.classes[0].count).p > 0.001);
}

TEST_CASE("SD state at step t is uniform within each ones class") {
  auto table = uniformity_probe(6, 2, 3, 200000, 3);
  CHECK(table.n == 6);
  uint64_t grand = 0;
  for (const auto &cls : table.classes) {
    CHECK(cls.ones >= 2);
    CHECK(cls.ones <= 5);  // three picks add at most three ones
    uint64_t total = 0;
    for (uint64_t c : cls.count) total += c;
    grand += total;
    if (total >= 5 * cls.count.size())
      CHECK(chi_square_uniform(cls.count).p > 0.001);
  }
  CHECK(grand == 200000);
  CHECK_THROWS_AS(uniformity_probe(17, 2, 1, 10, 1), error);
  CHECK_THROWS_AS(uniformity_probe(6, 7, 1, 10, 1), error);
}

TEST_CASE("trace JSON carries counters and optional steps") {
  Formula f(3, {C(1, 2, 3)});
  auto t = local_search(f, Assignment(3, 0), 1);
  auto compact = trace_json(t, false);
  CHECK(compact["kind"] == "LS");
  CHECK(compact["status"] == "satisfied");
  CHECK(compact["flips"] == 1);
  CHECK(!compact.contains("steps"));
  auto full = trace_json(t, true);
  CHECK(full["initial"] == "000");
  CHECK(full["steps"].size() == 1);
  CHECK(full["steps"][0]["flipped"] == true);

  auto ct = coupled_run(sample_planted(8, 20, 5), std::nullopt, 9);
  auto cj = coupled_json(ct, true);
  CHECK(cj["terminal_distance"].is_number());
  CHECK(cj["distance"].size() == (size_t)ct.steps_taken);
}
