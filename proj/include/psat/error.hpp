#pragma once

#include <stdexcept>
#include <string>

namespace psat {

// Error categories map 1:1 onto the C API status codes.
enum class errc {
  invalid_argument = 1,  // bad parameter or contract violation by the caller
  parse = 2,             // malformed input text (DIMACS, JSON config)
  io = 3,                // file open/read/write failure
  limit = 4,             // size guard on an exact-oracle operation
  internal = 5,          // broken internal invariant; always a bug
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string &what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string &what) { throw error(code, what); }

}  // namespace psat
