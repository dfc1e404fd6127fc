#pragma once

// 3-CNF data model: literals, canonical 3-clauses, position-indexed formulas,
// assignments, and the vote / improving-set semantics all solvers rely on.
//
// A clause is a set of 3 signed distinct variables stored with ascending
// variable index; the formula is an ordered sequence of clauses (positions
// matter, duplicates allowed).

#include <array>
#include <cstdint>
#include <vector>

#include "psat/error.hpp"

namespace psat {

using Var = int32_t;

struct Lit {
  int32_t code = 0;  // var * 2 + (positive ? 1 : 0)

  static Lit pos(Var v) { return Lit{v * 2 + 1}; }
  static Lit neg(Var v) { return Lit{v * 2}; }
  Var var() const { return code >> 1; }
  bool positive() const { return code & 1; }
  bool operator==(const Lit &o) const = default;
};

struct Clause {
  std::array<Lit, 3> lit;

  bool operator==(const Clause &o) const = default;
};

// Validates distinct variables and returns the canonical (ascending-var) form.
Clause make_clause(Lit a, Lit b, Lit c);

// Number of positive literals, 0..3.
enum class ClauseType : uint8_t { nnn = 0, pnn = 1, ppn = 2, ppp = 3 };

ClauseType clause_type(const Clause &c);

struct Assignment {
  std::vector<uint8_t> v;

  Assignment() = default;
  explicit Assignment(size_t n, uint8_t fill = 0) : v(n, fill) {}
  size_t size() const { return v.size(); }
  uint8_t operator[](size_t i) const { return v[i]; }
  uint8_t &operator[](size_t i) { return v[i]; }
  void flip(Var x) { v[x] ^= 1; }
  bool operator==(const Assignment &o) const = default;
};

int64_t ones_count(const Assignment &a);
int64_t hamming(const Assignment &a, const Assignment &b);

class Formula {
 public:
  // n >= 3 (a 3-clause needs 3 distinct variables); every clause var < n.
  Formula(int32_t n, std::vector<Clause> clauses);

  int32_t n() const { return n_; }
  int64_t m() const { return static_cast<int64_t>(clauses_.size()); }
  const Clause &clause(size_t pos) const { return clauses_[pos]; }
  const std::vector<Clause> &clauses() const { return clauses_; }

  bool operator==(const Formula &o) const = default;

 private:
  int32_t n_;
  std::vector<Clause> clauses_;
};

bool is_satisfied(const Clause &c, const Assignment &a);
bool is_satisfied(const Formula &f, const Assignment &a);
int64_t sat_count(const Formula &f, const Assignment &a);
int64_t unsat_count(const Formula &f, const Assignment &a);

struct VoteTally {
  std::vector<int32_t> to_one;
  std::vector<int32_t> to_zero;
};

// A clause votes for x to be 1 (resp. 0) iff it contains the literal x
// (resp. ~x) and its other two literals are false under a. This single rule
// covers both the unsatisfied-clause and sole-satisfying-literal cases.
VoteTally compute_votes(const Formula &f, const Assignment &a);

// U = variables whose flip strictly increases sat_count
//   = variables whose votes-to-change strictly exceed votes-to-keep.
std::vector<Var> improving_set(const Formula &f, const Assignment &a);

bool is_local_minimum(const Formula &f, const Assignment &a);
bool is_proper_local_minimum(const Formula &f, const Assignment &a);

}  // namespace psat
