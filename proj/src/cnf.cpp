#include "psat/cnf.hpp"

#include <algorithm>

namespace psat {

Clause make_clause(Lit a, Lit b, Lit c) {
  Clause cl{{a, b, c}};
  std::sort(cl.lit.begin(), cl.lit.end(),
            [](Lit x, Lit y) { return x.var() < y.var(); });
  if (cl.lit[0].var() == cl.lit[1].var() || cl.lit[1].var() == cl.lit[2].var())
    fail(errc::invalid_argument, "clause with repeated variable");
  if (cl.lit[0].var() < 0)
    fail(errc::invalid_argument, "negative variable index");
  return cl;
}

ClauseType clause_type(const Clause &c) {
  int p = c.lit[0].positive() + c.lit[1].positive() + c.lit[2].positive();
  return static_cast<ClauseType>(p);
}

int64_t ones_count(const Assignment &a) {
  int64_t k = 0;
  for (uint8_t b : a.v) k += b;
  return k;
}

int64_t hamming(const Assignment &a, const Assignment &b) {
  if (a.size() != b.size())
    fail(errc::invalid_argument, "hamming: assignment lengths differ");
  int64_t d = 0;
  for (size_t i = 0; i < a.size(); i++) d += a.v[i] != b.v[i];
  return d;
}

Formula::Formula(int32_t n, std::vector<Clause> clauses)
    : n_(n), clauses_(std::move(clauses)) {
  if (n < 3) fail(errc::invalid_argument, "formula needs n >= 3");
  for (const Clause &c : clauses_)
    if (c.lit[2].var() >= n)  // canonical order: lit[2] holds the max var
      fail(errc::invalid_argument, "clause variable out of range");
}

static void check_len(const Formula &f, const Assignment &a, const char *op) {
  if (a.size() != static_cast<size_t>(f.n()))
    fail(errc::invalid_argument, std::string(op) + ": assignment length != n");
}

bool is_satisfied(const Clause &c, const Assignment &a) {
  for (Lit l : c.lit)
    if (a[l.var()] == l.positive()) return true;
  return false;
}

bool is_satisfied(const Formula &f, const Assignment &a) {
  check_len(f, a, "is_satisfied");
  for (const Clause &c : f.clauses())
    if (!is_satisfied(c, a)) return false;
  return true;
}

int64_t sat_count(const Formula &f, const Assignment &a) {
  check_len(f, a, "sat_count");
  int64_t s = 0;
  for (const Clause &c : f.clauses()) s += is_satisfied(c, a);
  return s;
}

int64_t unsat_count(const Formula &f, const Assignment &a) {
  return f.m() - sat_count(f, a);
}

VoteTally compute_votes(const Formula &f, const Assignment &a) {
  check_len(f, a, "compute_votes");
  VoteTally t;
  t.to_one.assign(f.n(), 0);
  t.to_zero.assign(f.n(), 0);
  for (const Clause &c : f.clauses()) {
    for (int i = 0; i < 3; i++) {
      Lit l = c.lit[i];
      Lit o1 = c.lit[(i + 1) % 3], o2 = c.lit[(i + 2) % 3];
      bool others_false = a[o1.var()] != o1.positive() && a[o2.var()] != o2.positive();
      if (!others_false) continue;
      if (l.positive())
        t.to_one[l.var()]++;
      else
        t.to_zero[l.var()]++;
    }
  }
  return t;
}

std::vector<Var> improving_set(const Formula &f, const Assignment &a) {
  VoteTally t = compute_votes(f, a);
  std::vector<Var> u;
  for (Var x = 0; x < f.n(); x++) {
    int32_t change = a[x] ? t.to_zero[x] : t.to_one[x];
    int32_t keep = a[x] ? t.to_one[x] : t.to_zero[x];
    if (change > keep) u.push_back(x);
  }
  return u;
}

bool is_local_minimum(const Formula &f, const Assignment &a) {
  return improving_set(f, a).empty();
}

bool is_proper_local_minimum(const Formula &f, const Assignment &a) {
  return is_local_minimum(f, a) && unsat_count(f, a) > 0;
}

}  // namespace psat
