#pragma once

// DIMACS CNF I/O restricted to width-3 clauses with distinct variables.
// Header "p cnf <n> <m>", 1-indexed signed literals, 0-terminated clauses,
// 'c' comment lines ignored. Round-trips canonically.

#include <iosfwd>
#include <string>
#include <vector>

#include "psat/cnf.hpp"

namespace psat {

Formula dimacs_read(std::istream &in);
Formula dimacs_read(const std::string &text);
Formula dimacs_read_file(const std::string &path);

// Optional comment lines are emitted before the header (no leading "c ").
void dimacs_write(const Formula &f, std::ostream &out,
                  const std::vector<std::string> &comments = {});
std::string dimacs_write(const Formula &f,
                         const std::vector<std::string> &comments = {});
void dimacs_write_file(const Formula &f, const std::string &path,
                       const std::vector<std::string> &comments = {});

}  // namespace psat
