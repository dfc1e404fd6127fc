#include "psat/census.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "psat/error.hpp"

namespace psat {

namespace {

void check_var(int32_t n, int32_t x, const char *op) {
  if (x < 0 || x >= n) fail(errc::invalid_argument, std::string(op) + ": variable out of range");
}

// Positive-literal var and the two negative vars of a (+,-,-) clause.
struct PnnShape {
  int32_t pos;
  int32_t neg[2];
};

PnnShape pnn_shape(const Clause &c) {
  PnnShape s{-1, {-1, -1}};
  int k = 0;
  for (Lit l : c.lit) {
    if (l.positive())
      s.pos = l.var();
    else
      s.neg[k++] = l.var();
  }
  return s;
}

}  // namespace

PrimalGraph primal_graph(const Formula &f) {
  PrimalGraph g;
  g.n = f.n();
  std::vector<std::vector<int32_t>> rows(g.n);
  for (const Clause &c : f.clauses()) {
    const int32_t v[3] = {c.lit[0].var(), c.lit[1].var(), c.lit[2].var()};
    for (int i = 0; i < 3; i++)
      for (int j = 0; j < 3; j++)
        if (i != j) rows[v[i]].push_back(v[j]);
  }
  g.offset.assign(g.n + 1, 0);
  for (int32_t x = 0; x < g.n; x++) {
    auto &row = rows[x];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    g.offset[x + 1] = g.offset[x] + static_cast<int64_t>(row.size());
    g.neighbor.insert(g.neighbor.end(), row.begin(), row.end());
  }
  return g;
}

int64_t max_degree(const PrimalGraph &g) {
  int64_t best = 0;
  for (int32_t x = 0; x < g.n; x++) best = std::max(best, g.degree(x));
  return best;
}

mpq_class avg_degree(const PrimalGraph &g, const std::vector<int32_t> &members) {
  if (members.empty()) fail(errc::invalid_argument, "avg_degree: empty set");
  std::vector<uint8_t> in(g.n, 0);
  for (int32_t x : members) {
    check_var(g.n, x, "avg_degree");
    if (in[x]) fail(errc::invalid_argument, "avg_degree: duplicate member");
    in[x] = 1;
  }
  int64_t ends = 0;  // directed edge ends inside the induced subgraph
  for (int32_t x : members)
    for (int64_t i = g.offset[x]; i < g.offset[x + 1]; i++)
      if (in[g.neighbor[i]]) ends++;
  mpq_class r(ends, static_cast<long>(members.size()));
  r.canonicalize();
  return r;
}

int64_t distance(const PrimalGraph &g, int32_t x, int32_t y) {
  check_var(g.n, x, "distance");
  check_var(g.n, y, "distance");
  if (x == y) return 0;
  std::vector<int64_t> dist(g.n, -1);
  dist[x] = 0;
  std::queue<int32_t> q;
  q.push(x);
  while (!q.empty()) {
    int32_t u = q.front();
    q.pop();
    for (int64_t i = g.offset[u]; i < g.offset[u + 1]; i++) {
      int32_t v = g.neighbor[i];
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      if (v == y) return dist[v];
      q.push(v);
    }
  }
  return -1;
}

std::vector<int64_t> pnn_positive_counts(const Formula &f) {
  std::vector<int64_t> cnt(f.n(), 0);
  for (const Clause &c : f.clauses())
    if (clause_type(c) == ClauseType::pnn) cnt[pnn_shape(c).pos]++;
  return cnt;
}

bool is_k_isolated(const Formula &f, int32_t x, int64_t k) {
  check_var(f.n(), x, "is_k_isolated");
  if (k < 0) fail(errc::invalid_argument, "is_k_isolated: k < 0");
  int64_t cnt = 0;
  for (const Clause &c : f.clauses())
    if (clause_type(c) == ClauseType::pnn && pnn_shape(c).pos == x) cnt++;
  return cnt <= k;
}

std::vector<int64_t> support_clauses(const Formula &f, const Assignment &a, int32_t x) {
  check_var(f.n(), x, "support_clauses");
  if (a.size() != static_cast<size_t>(f.n()))
    fail(errc::invalid_argument, "support_clauses: assignment length != n");
  if (a[x] != 0) fail(errc::invalid_argument, "support_clauses: a[x] must be 0");
  std::vector<int64_t> out;
  for (int64_t p = 0; p < f.m(); p++) {
    const Clause &c = f.clause(p);
    int true_lits = 0;
    bool sole_is_neg_x = false;
    for (Lit l : c.lit)
      if (a[l.var()] == l.positive()) {
        true_lits++;
        sole_is_neg_x = (l.var() == x && !l.positive());
      }
    if (true_lits == 1 && sole_is_neg_x) out.push_back(p);
  }
  return out;
}

std::vector<Cap> find_caps(const Formula &f) {
  const auto cnt = pnn_positive_counts(f);
  // Sole PNN-positive position per variable; meaningful only where cnt == 1.
  std::vector<int64_t> sole(f.n(), -1);
  for (int64_t p = 0; p < f.m(); p++) {
    const Clause &c = f.clause(p);
    if (clause_type(c) == ClauseType::pnn) sole[pnn_shape(c).pos] = p;
  }
  std::vector<Cap> out;
  for (int64_t j = 0; j < f.m(); j++) {
    const Clause &cj = f.clause(j);
    if (clause_type(cj) != ClauseType::pnn) continue;
    const PnnShape sj = pnn_shape(cj);
    const int32_t x5 = sj.pos;
    if (cnt[x5] != 1) continue;  // sole PNN-positive occurrence must be j itself
    for (int pick = 0; pick < 2; pick++) {
      const int32_t x1 = sj.neg[pick];
      const int32_t x4 = sj.neg[1 - pick];
      if (cnt[x1] != 1) continue;
      const int64_t i = sole[x1];
      const PnnShape si = pnn_shape(f.clause(i));
      const int32_t x2 = si.neg[0];
      const int32_t x3 = si.neg[1];
      if (cnt[x2] < 1 || cnt[x3] < 1) continue;  // must not be 0-isolated
      if (x2 == x4 || x2 == x5 || x3 == x4 || x3 == x5) continue;
      out.push_back(Cap{x1, x2, x3, x4, x5, i, j});
    }
  }
  return out;
}

int64_t count_caps(const Formula &f) { return static_cast<int64_t>(find_caps(f).size()); }

double expected_caps_asymptotic(int64_t n, double rho) {
  if (n < 5) fail(errc::invalid_argument, "expected_caps_asymptotic: n < 5");
  if (rho <= 0.0) fail(errc::invalid_argument, "expected_caps_asymptotic: rho <= 0");
  const double nn = static_cast<double>(n);
  const double expo = 1.0 - (6.0 / 7.0) * rho / std::log(nn);
  return std::pow(rho, 4.0) * std::pow(nn, expo);
}

std::vector<Crown> find_crowns(const Formula &f) {
  std::vector<int64_t> occ(f.n(), 0);
  std::vector<std::array<int64_t, 2>> where(f.n(), {-1, -1});
  for (int64_t p = 0; p < f.m(); p++)
    for (Lit l : f.clause(p).lit) {
      const int32_t v = l.var();
      if (occ[v] < 2) where[v][occ[v]] = p;
      occ[v]++;
    }
  std::vector<Crown> out;
  for (int64_t p0 = 0; p0 < f.m(); p0++) {
    const Clause &c = f.clause(p0);
    if (clause_type(c) != ClauseType::ppp) continue;
    Crown cr;
    cr.pos[0] = p0;
    bool ok = true;
    for (int i = 0; i < 3 && ok; i++) {
      const int32_t xi = c.lit[i].var();
      cr.x[i] = xi;
      if (occ[xi] != 2) {
        ok = false;
        break;
      }
      const int64_t pi = where[xi][0] == p0 ? where[xi][1] : where[xi][0];
      cr.pos[i + 1] = pi;
      const Clause &ci = f.clause(pi);
      if (clause_type(ci) != ClauseType::ppn) {
        ok = false;
        break;
      }
      int leg = 0;
      for (Lit l : ci.lit) {
        if (!l.positive()) {
          if (l.var() != xi) ok = false;
        } else {
          if (occ[l.var()] != 1) ok = false;
          cr.x[3 + 2 * i + leg++] = l.var();
        }
      }
    }
    if (ok) out.push_back(cr);
  }
  return out;
}

int64_t count_crowns(const Formula &f) { return static_cast<int64_t>(find_crowns(f).size()); }

Assignment cap_minimum_assignment(const Formula &f, const Cap &cap) {
  check_var(f.n(), cap.x1, "cap_minimum_assignment");
  check_var(f.n(), cap.x5, "cap_minimum_assignment");
  Assignment a(f.n(), 1);
  a.v[cap.x1] = 0;
  a.v[cap.x5] = 0;
  return a;
}

std::vector<std::pair<int32_t, int32_t>> isolation_pair_scan(const Formula &f, int64_t d1,
                                                             int64_t d2) {
  if (d1 < 1 || d2 < 1) fail(errc::invalid_argument, "isolation_pair_scan: d1, d2 must be >= 1");
  const auto cnt = pnn_positive_counts(f);
  std::vector<uint8_t> iso(f.n(), 0);
  for (int32_t x = 0; x < f.n(); x++) iso[x] = cnt[x] <= d1;
  const PrimalGraph g = primal_graph(f);
  std::vector<std::pair<int32_t, int32_t>> out;
  std::vector<int64_t> dist(f.n(), -1);
  std::vector<int32_t> touched;
  for (int32_t x = 0; x < f.n(); x++) {
    if (!iso[x]) continue;
    // BFS truncated at depth d2, reporting y > x to list each pair once.
    dist[x] = 0;
    touched.assign(1, x);
    std::queue<int32_t> q;
    q.push(x);
    while (!q.empty()) {
      const int32_t u = q.front();
      q.pop();
      if (dist[u] == d2) continue;
      for (int64_t i = g.offset[u]; i < g.offset[u + 1]; i++) {
        const int32_t v = g.neighbor[i];
        if (dist[v] >= 0) continue;
        dist[v] = dist[u] + 1;
        touched.push_back(v);
        if (iso[v] && v > x) out.push_back({x, v});
        q.push(v);
      }
    }
    for (int32_t v : touched) dist[v] = -1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Clause> make_crown_clauses(int32_t base) {
  if (base < 0) fail(errc::invalid_argument, "make_crown_clauses: base < 0");
  const int32_t b = base;
  return {
      make_clause(Lit::pos(b), Lit::pos(b + 1), Lit::pos(b + 2)),
      make_clause(Lit::neg(b), Lit::pos(b + 3), Lit::pos(b + 4)),
      make_clause(Lit::neg(b + 1), Lit::pos(b + 5), Lit::pos(b + 6)),
      make_clause(Lit::neg(b + 2), Lit::pos(b + 7), Lit::pos(b + 8)),
  };
}

nlohmann::ordered_json census_json(const Formula &f, bool include_structures,
                                   std::optional<std::pair<int64_t, int64_t>> isolation) {
  const PrimalGraph g = primal_graph(f);
  const auto caps = find_caps(f);
  const auto crowns = find_crowns(f);
  nlohmann::ordered_json j;
  j["n"] = f.n();
  j["m"] = f.m();
  j["max_degree"] = max_degree(g);
  j["cap_count"] = caps.size();
  j["crown_count"] = crowns.size();
  if (isolation) {
    const auto pairs = isolation_pair_scan(f, isolation->first, isolation->second);
    nlohmann::ordered_json iso;
    iso["d1"] = isolation->first;
    iso["d2"] = isolation->second;
    iso["pair_count"] = pairs.size();
    nlohmann::ordered_json lst = nlohmann::ordered_json::array();
    for (auto &[a, b] : pairs) lst.push_back({a, b});
    iso["pairs"] = lst;
    j["isolation"] = iso;
  }
  if (include_structures) {
    nlohmann::ordered_json cl = nlohmann::ordered_json::array();
    for (const Cap &c : caps)
      cl.push_back({{"variables", {c.x1, c.x2, c.x3, c.x4, c.x5}},
                    {"positions", {c.c1_pos, c.c2_pos}}});
    j["caps"] = cl;
    nlohmann::ordered_json rl = nlohmann::ordered_json::array();
    for (const Crown &c : crowns)
      rl.push_back({{"variables", c.x}, {"positions", c.pos}});
    j["crowns"] = rl;
  }
  return j;
}

}  // namespace psat
