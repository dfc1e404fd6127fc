#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "psat/cnf.hpp"
#include "psat/generator.hpp"
#include "psat/rng.hpp"
#include "test_util.hpp"

using namespace psat;
using namespace psat_test;

static Clause C(int a, int b, int c) {
  // signed 1-indexed shorthand: C(1,-2,-3) = (x0 v ~x1 v ~x2)
  auto lit = [](int s) { return s > 0 ? Lit::pos(s - 1) : Lit::neg(-s - 1); };
  return make_clause(lit(a), lit(b), lit(c));
}

TEST_CASE("clause construction canonicalizes and validates") {
  Clause c = C(3, 1, -2);
  CHECK(c.lit[0].var() == 0);
  CHECK(c.lit[1].var() == 1);
  CHECK(c.lit[2].var() == 2);
  CHECK(c.lit[0].positive());
  CHECK(!c.lit[1].positive());
  CHECK(c.lit[2].positive());
  CHECK_THROWS_AS(C(1, 1, 2), error);
  CHECK_THROWS_AS(make_clause(Lit::pos(-1), Lit::pos(1), Lit::pos(2)), error);
}

TEST_CASE("clause_type counts positive literals") {
  CHECK(clause_type(C(1, -2, -3)) == ClauseType::pnn);
  CHECK(clause_type(C(-1, -4, 5)) == ClauseType::pnn);
  CHECK(clause_type(C(1, 2, 3)) == ClauseType::ppp);
  CHECK(clause_type(C(-1, -2, -3)) == ClauseType::nnn);
  CHECK(clause_type(C(1, 2, -3)) == ClauseType::ppn);
}

TEST_CASE("formula construction guards") {
  CHECK_THROWS_AS(Formula(2, {}), error);
  CHECK_THROWS_AS(Formula(3, {C(1, 2, 4)}), error);
  Formula f(3, {C(1, 2, 3), C(1, 2, 3)});
  CHECK(f.m() == 2);  // duplicates occupy distinct positions
}

TEST_CASE("is_satisfied basics") {
  Assignment ones(5, 1);
  CHECK(is_satisfied(C(-1, -4, 5), ones));
  Assignment a(5, 1);
  a[4] = 0;
  CHECK(!is_satisfied(C(-1, -4, 5), a));
  Assignment zeros(3, 0);
  CHECK(!is_satisfied(C(1, 2, 3), zeros));
}

TEST_CASE("sat/unsat counts, duplicates counted separately") {
  Formula f(3, {C(1, 2, 3), C(1, 2, 3)});
  Assignment zeros(3, 0), ones(3, 1);
  CHECK(sat_count(f, ones) == 2);
  CHECK(unsat_count(f, zeros) == 2);
  CHECK(sat_count(f, zeros) + unsat_count(f, zeros) == f.m());
  Assignment wrong(4, 0);
  CHECK_THROWS_AS(sat_count(f, wrong), error);
}

TEST_CASE("vote rule on the spec'd hand cases") {
  Formula f1(3, {C(1, 2, 3)});
  Assignment zeros(3, 0);
  auto t = compute_votes(f1, zeros);
  for (Var x = 0; x < 3; x++) {
    CHECK(t.to_one[x] == 1);
    CHECK(t.to_zero[x] == 0);
  }

  Formula f2(5, {C(-1, -4, 5)});
  Assignment ones(5, 1);
  auto t2 = compute_votes(f2, ones);
  CHECK(t2.to_one[4] == 1);  // x5 is the sole satisfying literal
  CHECK(t2.to_zero[0] == 0);
  CHECK(t2.to_zero[3] == 0);
  int32_t total = 0;
  for (Var x = 0; x < 5; x++) total += t2.to_one[x] + t2.to_zero[x];
  CHECK(total == 1);

  Formula f3(3, {});
  auto t3 = compute_votes(f3, Assignment(3, 0));
  for (Var x = 0; x < 3; x++) CHECK(t3.to_one[x] + t3.to_zero[x] == 0);
}

TEST_CASE("improving set on a single clause") {
  Formula f(3, {C(1, 2, 3)});
  auto u = improving_set(f, Assignment(3, 0));
  CHECK(u == std::vector<Var>{0, 1, 2});
  CHECK(!is_local_minimum(f, Assignment(3, 0)));
  CHECK(is_local_minimum(f, Assignment(3, 1)));
  CHECK(!is_proper_local_minimum(f, Assignment(3, 1)));
}

TEST_CASE("hamming distance") {
  Assignment a(3, 1), b(3, 1);
  CHECK(hamming(a, b) == 0);
  Assignment z(3, 0);
  CHECK(hamming(z, a) == 3);
  Assignment c = a;
  c.flip(1);
  CHECK(hamming(a, c) == 1);
  Assignment d(4, 0);
  CHECK_THROWS_AS(hamming(a, d), error);
}

// The central identity: flip delta of sat_count equals the oriented vote
// margin, for every formula, assignment and variable.
static void check_vote_identity_exhaustive(const Formula &f) {
  const int32_t n = f.n();
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); bits++) {
    Assignment a = assignment_from_bits(n, bits);
    auto t = compute_votes(f, a);
    auto u = improving_set(f, a);
    for (Var x = 0; x < n; x++) {
      int64_t delta = brute_flip_delta(f, a, x);
      int32_t change = a[x] ? t.to_zero[x] : t.to_one[x];
      int32_t keep = a[x] ? t.to_one[x] : t.to_zero[x];
      REQUIRE(delta == change - keep);
      REQUIRE(std::binary_search(u.begin(), u.end(), x) == (delta > 0));
    }
  }
}

TEST_CASE("vote identity, exhaustive over assignments on seeded fixtures") {
  int fixtures = 0;
  for (int32_t n = 3; n <= 6; n++) {
    for (int64_t m = 0; m <= 16; m += (m < 4 ? 1 : 3)) {
      for (int rep = 0; rep < 6; rep++) {
        uint64_t seed = derive_stream(0xC0FFEE, fixtures++);
        Formula f = rep % 2 ? sample_planted(n, m, seed) : sample_uniform(n, m, seed);
        check_vote_identity_exhaustive(f);
      }
    }
  }
}

TEST_CASE("improving set matches brute force on random instances") {
  for (int rep = 0; rep < 300; rep++) {
    uint64_t seed = derive_stream(0xBEEF, rep);
    Rng rng(seed);
    int32_t n = 3 + static_cast<int32_t>(rng.below(8));
    int64_t m = static_cast<int64_t>(rng.below(17));
    Formula f = sample_uniform(n, m, rng.next());
    Assignment a(n);
    for (int32_t i = 0; i < n; i++) a[i] = rng.coin();
    auto u = improving_set(f, a);
    std::set<Var> got(u.begin(), u.end());
    CHECK(got == brute_improving_set(f, a));
    CHECK(is_local_minimum(f, a) == got.empty());
  }
}

TEST_CASE("sat_count invariant under clause permutation") {
  Formula f = sample_uniform(8, 20, 77);
  auto clauses = f.clauses();
  Rng rng(123);
  for (size_t i = clauses.size(); i > 1; i--)
    std::swap(clauses[i - 1], clauses[rng.below(i)]);
  Formula g(8, clauses);
  for (int rep = 0; rep < 50; rep++) {
    Assignment a(8);
    for (int i = 0; i < 8; i++) a[i] = rng.coin();
    CHECK(sat_count(f, a) == sat_count(g, a));
  }
}

TEST_CASE("crown all-zero vs single clause: local-minimum classification") {
  // 4-clause crown over 9 variables; all-zero on it is a proper local minimum.
  Formula crown(9, {C(1, 2, 3), C(-1, 4, 5), C(-2, 6, 7), C(-3, 8, 9)});
  Assignment zeros(9, 0);
  CHECK(is_proper_local_minimum(crown, zeros));
  CHECK(unsat_count(crown, zeros) == 1);  // only the central clause
  Formula single(3, {C(1, 2, 3)});
  CHECK(!is_local_minimum(single, Assignment(3, 0)));
}
