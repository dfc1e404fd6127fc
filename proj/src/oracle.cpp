#include "psat/oracle.hpp"

#include <algorithm>
#include <bit>

#include "psat/error.hpp"

namespace psat {

namespace {

mpz_class binom(int64_t n, int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpq_class mpq_pow(mpq_class b, uint64_t e) {
  b.canonicalize();
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), e);
  return r;  // coprime base stays coprime under powers
}

// Per-variable clause occurrence lists for Gray-code walks.
struct OccIndex {
  std::vector<int32_t> flat;     // clause positions, grouped by variable
  std::vector<int64_t> offset;   // size n+1
};

OccIndex occurrence_index(const Formula &f) {
  OccIndex idx;
  std::vector<int64_t> deg(f.n(), 0);
  for (const Clause &c : f.clauses())
    for (Lit l : c.lit) deg[l.var()]++;
  idx.offset.assign(f.n() + 1, 0);
  for (int32_t x = 0; x < f.n(); x++) idx.offset[x + 1] = idx.offset[x] + deg[x];
  idx.flat.resize(idx.offset[f.n()]);
  std::vector<int64_t> cursor(idx.offset.begin(), idx.offset.end() - 1);
  for (int64_t p = 0; p < f.m(); p++)
    for (Lit l : f.clause(p).lit) idx.flat[cursor[l.var()]++] = static_cast<int32_t>(p);
  return idx;
}

int64_t q_to_zeros(int32_t n, const mpq_class &q) {
  if (q < 0 || q > 1) fail(errc::invalid_argument, "clause_sat_probability: q outside [0,1]");
  mpq_class zn = q * n;
  zn.canonicalize();
  if (zn.get_den() != 1) fail(errc::invalid_argument, "clause_sat_probability: q*n not integral");
  return zn.get_num().get_si();
}

}  // namespace

OptResult brute_force_opt(const Formula &f) {
  if (f.n() > 24) fail(errc::limit, "brute_force_opt: n > 24");
  const int32_t n = f.n();
  const OccIndex idx = occurrence_index(f);
  std::vector<int8_t> true_count(f.m(), 0);
  Assignment a(n, 0);
  int64_t unsat = 0;
  for (int64_t p = 0; p < f.m(); p++) {
    for (Lit l : f.clause(p).lit)
      if (!l.positive()) true_count[p]++;
    if (true_count[p] == 0) unsat++;
  }
  int64_t best_unsat = unsat;
  uint64_t best_bits = 0;
  // Gray-code walk: step i flips variable ctz(i).
  const uint64_t total = uint64_t{1} << n;
  for (uint64_t i = 1; i < total; i++) {
    const int32_t x = std::countr_zero(i);
    a.flip(x);
    const uint8_t val = a[x];
    for (int64_t k = idx.offset[x]; k < idx.offset[x + 1]; k++) {
      const int32_t p = idx.flat[k];
      bool lit_true = false;
      for (Lit l : f.clause(p).lit)
        if (l.var() == x) lit_true = (val != 0) == l.positive();
      if (lit_true) {
        if (true_count[p]++ == 0) unsat--;
      } else {
        if (--true_count[p] == 0) unsat++;
      }
    }
    if (unsat < best_unsat) {
      best_unsat = unsat;
      best_bits = i ^ (i >> 1);  // Gray code of step index = current bits
    }
  }
  OptResult r;
  r.opt = f.m() - best_unsat;
  r.witness = Assignment(n, 0);
  for (int32_t x = 0; x < n; x++) r.witness[x] = (best_bits >> x) & 1;
  return r;
}

MinimumClass classify_assignment(const Formula &f, const Assignment &a) {
  if (!improving_set(f, a).empty()) return MinimumClass::not_minimum;
  return unsat_count(f, a) > 0 ? MinimumClass::proper_local_minimum
                               : MinimumClass::global_minimum;
}

MinimaCensus enumerate_minima(const Formula &f) {
  if (f.n() > 20) fail(errc::limit, "enumerate_minima: n > 20");
  const int32_t n = f.n();
  const OccIndex idx = occurrence_index(f);
  MinimaCensus census;
  census.proper_ones_histogram.assign(n + 1, 0);
  std::vector<int8_t> true_count(f.m(), 0);
  Assignment a(n, 0);
  int64_t unsat = 0, ones = 0;
  for (int64_t p = 0; p < f.m(); p++) {
    for (Lit l : f.clause(p).lit)
      if (!l.positive()) true_count[p]++;
    if (true_count[p] == 0) unsat++;
  }
  int64_t min_unsat = unsat;
  std::vector<int64_t> delta(n, 0);
  const uint64_t total = uint64_t{1} << n;
  for (uint64_t i = 0;; i++) {
    // flip delta per variable: gain t==0 clauses, lose sole-support clauses
    std::fill(delta.begin(), delta.end(), 0);
    for (int64_t p = 0; p < f.m(); p++) {
      if (true_count[p] == 0) {
        for (Lit l : f.clause(p).lit) delta[l.var()]++;
      } else if (true_count[p] == 1) {
        for (Lit l : f.clause(p).lit)
          if ((a[l.var()] != 0) == l.positive()) delta[l.var()]--;
      }
    }
    const bool local_min = std::all_of(delta.begin(), delta.end(),
                                       [](int64_t d) { return d <= 0; });
    if (!local_min) {
      census.not_minimum++;
    } else if (unsat > 0) {
      census.proper_local_minimum++;
      census.proper_ones_histogram[ones]++;
    } else {
      census.global_minimum++;
    }
    min_unsat = std::min(min_unsat, unsat);
    if (i + 1 == total) break;
    const int32_t x = std::countr_zero(i + 1);
    a.flip(x);
    const uint8_t val = a[x];
    ones += val ? 1 : -1;
    for (int64_t k = idx.offset[x]; k < idx.offset[x + 1]; k++) {
      const int32_t p = idx.flat[k];
      bool lit_true = false;
      for (Lit l : f.clause(p).lit)
        if (l.var() == x) lit_true = (val != 0) == l.positive();
      if (lit_true) {
        if (true_count[p]++ == 0) unsat--;
      } else {
        if (--true_count[p] == 0) unsat++;
      }
    }
  }
  census.opt = f.m() - min_unsat;
  return census;
}

nlohmann::ordered_json minima_census_json(const MinimaCensus &c) {
  nlohmann::ordered_json j;
  j["opt"] = c.opt;
  j["not_minimum"] = c.not_minimum;
  j["global_minimum"] = c.global_minimum;
  j["proper_local_minimum"] = c.proper_local_minimum;
  j["proper_ones_histogram"] = c.proper_ones_histogram;
  return j;
}

mpq_class clause_sat_probability(int32_t n, const mpq_class &q) {
  if (n < 3) fail(errc::invalid_argument, "clause_sat_probability: n < 3");
  const int64_t z = q_to_zeros(n, q);
  // unsatisfying sign-triples: (+,+,+) on three zeros, (+,+,-) on two zeros
  // and one one, (+,-,-) on one zero and two ones
  const mpz_class bad = binom(z, 3) + binom(z, 2) * (n - z) + z * binom(n - z, 2);
  mpq_class p(bad, 7 * binom(n, 3));
  p.canonicalize();
  return 1 - p;
}

mpq_class clause_sat_probability_enum(int32_t n, const mpq_class &q) {
  if (n < 3) fail(errc::invalid_argument, "clause_sat_probability_enum: n < 3");
  if (n > 12) fail(errc::limit, "clause_sat_probability_enum: n > 12");
  const int64_t z = q_to_zeros(n, q);
  Assignment a(n, 1);
  for (int64_t i = 0; i < z; i++) a[i] = 0;
  int64_t sat = 0, all = 0;
  for (int32_t i = 0; i < n; i++)
    for (int32_t j = i + 1; j < n; j++)
      for (int32_t k = j + 1; k < n; k++)
        for (int bits = 1; bits < 8; bits++) {  // bit set = positive literal
          const Clause c = make_clause(bits & 1 ? Lit::pos(i) : Lit::neg(i),
                                       bits & 2 ? Lit::pos(j) : Lit::neg(j),
                                       bits & 4 ? Lit::pos(k) : Lit::neg(k));
          all++;
          if (is_satisfied(c, a)) sat++;
        }
  mpq_class p(sat, all);
  p.canonicalize();
  return p;
}

mpq_class cap_probability(int32_t n, int64_t m, SampleMode mode) {
  if (n < 3) fail(errc::invalid_argument, "cap_probability: n < 3");
  if (m < 0 || m > 1000000) fail(errc::limit, "cap_probability: m outside [0, 10^6]");
  if (m < 2 || n < 5) return 0;
  const mpz_class N = (mode == SampleMode::planted ? 7 : 8) * binom(n, 3);
  mpq_class p(binom(n - 1, 2), N);  // one clause is PNN-positive at a fixed var
  p.canonicalize();
  const uint64_t e = static_cast<uint64_t>(m - 2);
  // other m-2 clauses: none PNN-positive at x1 or x5, some at x2, some at x3
  const mpq_class excl =
      mpq_pow(1 - 2 * p, e) - 2 * mpq_pow(1 - 3 * p, e) + mpq_pow(1 - 4 * p, e);
  mpq_class pairs(mpz_class(n) * binom(n - 1, 2) * (n - 3) * (n - 4), N * N);
  pairs.canonicalize();
  mpq_class r = mpz_class(m) * mpz_class(m - 1) * pairs * excl;
  r.canonicalize();
  return r;
}

mpq_class crown_probability(int32_t n, int64_t m, SampleMode mode) {
  if (n < 3) fail(errc::invalid_argument, "crown_probability: n < 3");
  if (m < 0 || m > 1000000) fail(errc::limit, "crown_probability: m outside [0, 10^6]");
  if (m < 4 || n < 9) return 0;
  const mpz_class N = (mode == SampleMode::planted ? 7 : 8) * binom(n, 3);
  // central clause, three supports with fresh legs, all ordered over positions
  const mpz_class shapes =
      binom(n, 3) * binom(n - 3, 2) * binom(n - 5, 2) * binom(n - 7, 2);
  mpq_class pattern(shapes, N * N * N * N);
  pattern.canonicalize();
  mpq_class avoid(binom(n - 9, 3), binom(n, 3));  // one clause misses all nine
  avoid.canonicalize();
  mpq_class r = mpz_class(m) * mpz_class(m - 1) * mpz_class(m - 2) * mpz_class(m - 3) *
                pattern * mpq_pow(avoid, static_cast<uint64_t>(m - 4));
  r.canonicalize();
  return r;
}

}  // namespace psat
