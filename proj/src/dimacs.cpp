#include "psat/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace psat {

Formula dimacs_read(std::istream &in) {
  std::string line;
  int64_t n = -1, m = -1;
  int lineno = 0;

  auto parse_fail = [&](const std::string &msg) {
    fail(errc::parse, "dimacs line " + std::to_string(lineno) + ": " + msg);
  };

  // header
  while (std::getline(in, line)) {
    lineno++;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ss(line);
    std::string p, fmt;
    if (!(ss >> p >> fmt >> n >> m) || p != "p" || fmt != "cnf")
      parse_fail("expected 'p cnf <n> <m>'");
    if (n < 3) parse_fail("variable count must be >= 3");
    if (m < 0) parse_fail("negative clause count");
    break;
  }
  if (n < 0) fail(errc::parse, "dimacs: missing 'p cnf' header");

  std::vector<Clause> clauses;
  clauses.reserve(m);
  std::vector<Lit> cur;
  while (std::getline(in, line)) {
    lineno++;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ss(line);
    int64_t tok;
    while (ss >> tok) {
      if (tok == 0) {
        if (cur.size() != 3) parse_fail("clause width is not 3");
        if (cur[0].var() == cur[1].var() || cur[0].var() == cur[2].var() ||
            cur[1].var() == cur[2].var())
          parse_fail("repeated variable in clause");
        clauses.push_back(make_clause(cur[0], cur[1], cur[2]));
        cur.clear();
      } else {
        int64_t v = tok < 0 ? -tok : tok;
        if (v > n) parse_fail("literal exceeds declared variable count");
        if (cur.size() >= 3) parse_fail("clause width is not 3");
        Var x = static_cast<Var>(v - 1);  // DIMACS is 1-indexed
        cur.push_back(tok > 0 ? Lit::pos(x) : Lit::neg(x));
      }
    }
    if (!ss.eof()) parse_fail("bad token");
  }
  if (!cur.empty()) fail(errc::parse, "dimacs: unterminated clause at end of input");
  if (static_cast<int64_t>(clauses.size()) != m)
    fail(errc::parse, "dimacs: clause count does not match header");
  return Formula(static_cast<int32_t>(n), std::move(clauses));
}

Formula dimacs_read(const std::string &text) {
  std::istringstream ss(text);
  return dimacs_read(ss);
}

Formula dimacs_read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) fail(errc::io, "cannot open " + path);
  return dimacs_read(in);
}

void dimacs_write(const Formula &f, std::ostream &out,
                  const std::vector<std::string> &comments) {
  for (const auto &c : comments) out << "c " << c << "\n";
  out << "p cnf " << f.n() << " " << f.m() << "\n";
  for (const Clause &c : f.clauses()) {
    for (Lit l : c.lit)
      out << (l.positive() ? l.var() + 1 : -(l.var() + 1)) << " ";
    out << "0\n";
  }
}

std::string dimacs_write(const Formula &f, const std::vector<std::string> &comments) {
  std::ostringstream ss;
  dimacs_write(f, ss, comments);
  return ss.str();
}

void dimacs_write_file(const Formula &f, const std::string &path,
                       const std::vector<std::string> &comments) {
  std::ofstream out(path);
  if (!out) fail(errc::io, "cannot open " + path + " for writing");
  dimacs_write(f, out, comments);
  if (!out.flush()) fail(errc::io, "write failed: " + path);
}

}  // namespace psat
