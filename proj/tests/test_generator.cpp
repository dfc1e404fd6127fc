#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "psat/generator.hpp"
#include "psat/rng.hpp"
#include "psat/stats.hpp"

using namespace psat;

namespace {

// Sign pattern of a canonical clause: bit i set iff literal i is positive.
int sign_cat(const Clause &c) {
  int cat = 0;
  for (int i = 0; i < 3; i++)
    if (c.lit[i].positive()) cat |= 1 << i;
  return cat;
}

}  // namespace

TEST_CASE("density_for_kappa pins") {
  CHECK(density_for_kappa(1000, 7.0 / 6.0) == 8059);
  CHECK(density_for_kappa(100, 1.5) == 691);
  CHECK(density_for_kappa(3, 0.0) == 0);
}

TEST_CASE("spec validation requires exactly one density knob") {
  GeneratorSpec s;
  s.n = 10;
  CHECK_THROWS_AS(s.validate(), error);  // none given
  s.m = 5;
  s.kappa = 1.0;
  CHECK_THROWS_AS(s.validate(), error);  // two given
  s.kappa.reset();
  s.validate();
  CHECK(s.resolved_m() == 5);
  s.m.reset();
  s.rho = 2.0;
  s.validate();
  CHECK(s.resolved_m() == 20);
  s.n = 2;
  CHECK_THROWS_AS(s.validate(), error);  // n too small
}

TEST_CASE("spec json round trip") {
  GeneratorSpec s;
  s.n = 50;
  s.kappa = 1.25;
  s.mode = SampleMode::planted;
  s.seed = 77;
  Assignment a(50);
  for (int i = 0; i < 50; i += 3) a.v[i] = 1;
  s.planted_assignment = a;
  nlohmann::json j = s;
  GeneratorSpec t = j.get<GeneratorSpec>();
  CHECK(t.n == 50);
  CHECK(t.kappa == 1.25);
  CHECK(!t.m.has_value());
  CHECK(t.mode == SampleMode::planted);
  CHECK(*t.seed == 77);
  CHECK(t.planted_assignment->v == a.v);
}

TEST_CASE("same seed same formula, different seed different formula") {
  Formula a = sample_uniform(40, 120, 5);
  Formula b = sample_uniform(40, 120, 5);
  Formula c = sample_uniform(40, 120, 6);
  CHECK(a == b);
  CHECK(!(a == c));
  Formula p = sample_planted(40, 120, 5);
  Formula q = sample_planted(40, 120, 5);
  CHECK(p == q);
}

TEST_CASE("uniform sign patterns at n=3 are uniform over 8 categories") {
  Formula f = sample_uniform(3, 80000, 20260815);
  std::vector<uint64_t> counts(8, 0);
  for (int64_t i = 0; i < f.m(); i++) counts[sign_cat(f.clause(i))]++;
  ChiSquare cs = chi_square_uniform(counts);
  CHECK(cs.df == 7);
  CHECK(cs.p > 0.001);
}

TEST_CASE("planted clauses never have all literals false under the plant") {
  Formula f = sample_planted(3, 80000, 31337);
  std::vector<uint64_t> counts(8, 0);
  for (int64_t i = 0; i < f.m(); i++) counts[sign_cat(f.clause(i))]++;
  CHECK(counts[0] == 0);  // all-negative clause is excluded for the all-ones plant
  ChiSquare cs = chi_square_uniform(std::vector<uint64_t>(counts.begin() + 1, counts.end()));
  CHECK(cs.df == 6);
  CHECK(cs.p > 0.001);
}

TEST_CASE("planted type fractions are 1:3:3") {
  Formula f = sample_planted(30, 70000, 424242);
  uint64_t by_type[4] = {0, 0, 0, 0};
  for (int64_t i = 0; i < f.m(); i++) by_type[(int)clause_type(f.clause(i))]++;
  CHECK(by_type[(int)ClauseType::nnn] == 0);
  double m = (double)f.m();
  CHECK(std::abs(by_type[(int)ClauseType::ppp] / m - 1.0 / 7.0) < 0.01);
  CHECK(std::abs(by_type[(int)ClauseType::ppn] / m - 3.0 / 7.0) < 0.015);
  CHECK(std::abs(by_type[(int)ClauseType::pnn] / m - 3.0 / 7.0) < 0.015);
}

TEST_CASE("uniform mode is satisfied by all-ones iff no NNN clause") {
  Formula f = sample_uniform(8, 40, 99);
  Assignment ones(8);
  std::fill(ones.v.begin(), ones.v.end(), 1);
  bool has_nnn = false;
  for (int64_t i = 0; i < f.m(); i++)
    if (clause_type(f.clause(i)) == ClauseType::nnn) has_nnn = true;
  CHECK(is_satisfied(f, ones) == !has_nnn);
}

TEST_CASE("arbitrary plant transport satisfies the plant") {
  for (uint64_t seed = 1; seed <= 30; seed++) {
    int n = 12;
    Assignment plant(n);
    Rng r(derive_stream(0xAB, seed));
    for (int i = 0; i < n; i++) plant.v[i] = (uint8_t)r.coin();
    GeneratorSpec s;
    s.n = n;
    s.m = 60;
    s.mode = SampleMode::planted;
    s.planted_assignment = plant;
    Formula f = sample(s, seed);
    CHECK(is_satisfied(f, plant));
    // no clause is falsified by the plant in every literal, and the transport
    // is a sign relabeling: the two zero-count tests above carry over.
    for (int64_t i = 0; i < f.m(); i++) {
      const Clause &c = f.clause(i);
      int true_lits = 0;
      for (int j = 0; j < 3; j++)
        if (plant.v[c.lit[j].var()] == (c.lit[j].positive() ? 1 : 0)) true_lits++;
      CHECK(true_lits >= 1);
    }
  }
}

TEST_CASE("transport preserves the sign-pattern law relative to the plant") {
  // With plant p, the category of a clause measured relative to p (bit set iff
  // literal agrees with p) must be uniform over the 7 non-zero categories.
  int n = 3;
  Assignment plant(n);
  plant.v = {1, 0, 1};
  GeneratorSpec s;
  s.n = n;
  s.m = 70000;
  s.mode = SampleMode::planted;
  s.planted_assignment = plant;
  Formula f = sample(s, 2718281828);
  std::vector<uint64_t> counts(8, 0);
  for (int64_t i = 0; i < f.m(); i++) {
    const Clause &c = f.clause(i);
    int cat = 0;
    for (int j = 0; j < 3; j++)
      if (plant.v[c.lit[j].var()] == (c.lit[j].positive() ? 1 : 0)) cat |= 1 << j;
    counts[cat]++;
  }
  CHECK(counts[0] == 0);
  ChiSquare cs = chi_square_uniform(std::vector<uint64_t>(counts.begin() + 1, counts.end()));
  CHECK(cs.p > 0.001);
}

TEST_CASE("variable triples are uniform over C(n,3) for uniform mode") {
  int n = 6;  // 20 triples
  Formula f = sample_uniform(n, 60000, 55555);
  std::map<std::array<int, 3>, uint64_t> triple_counts;
  for (int64_t i = 0; i < f.m(); i++) {
    const Clause &c = f.clause(i);
    triple_counts[{c.lit[0].var(), c.lit[1].var(), c.lit[2].var()}]++;
  }
  CHECK(triple_counts.size() == 20);
  std::vector<uint64_t> counts;
  for (auto &kv : triple_counts) counts.push_back(kv.second);
  ChiSquare cs = chi_square_uniform(counts);
  CHECK(cs.df == 19);
  CHECK(cs.p > 0.001);
}

TEST_CASE("concat stacks clauses over a shared variable set") {
  Formula a = sample_planted(10, 7, 1);
  Formula b = sample_planted(10, 5, 2);
  Formula c = concat(a, b);
  CHECK(c.n() == 10);
  CHECK(c.m() == 12);
  CHECK(c.clause(3) == a.clause(3));
  CHECK(c.clause(7) == b.clause(0));
  Formula d = sample_planted(11, 5, 3);
  CHECK_THROWS_AS(concat(a, d), error);
}

TEST_CASE("widen keeps clauses and raises n") {
  Formula a = sample_uniform(5, 9, 4);
  Formula w = widen(a, 12);
  CHECK(w.n() == 12);
  CHECK(w.m() == 9);
  for (int64_t i = 0; i < a.m(); i++) CHECK(w.clause(i) == a.clause(i));
  CHECK_THROWS_AS(widen(a, 4), error);
}

TEST_CASE("rejection sampling does not skew the planted triple law") {
  // Planted mode re-draws sign bits only, so triples remain uniform.
  int n = 6;
  Formula f = sample_planted(n, 60000, 987654321);
  std::map<std::array<int, 3>, uint64_t> triple_counts;
  for (int64_t i = 0; i < f.m(); i++) {
    const Clause &c = f.clause(i);
    triple_counts[{c.lit[0].var(), c.lit[1].var(), c.lit[2].var()}]++;
  }
  std::vector<uint64_t> counts;
  for (auto &kv : triple_counts) counts.push_back(kv.second);
  CHECK(chi_square_uniform(counts).p > 0.001);
}
