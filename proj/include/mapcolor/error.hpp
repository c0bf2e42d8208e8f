#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mapcolor {

enum class ErrorKind {
  structural,      // malformed rotation or dart bookkeeping
  inconsistency,   // odd Euler characteristic
  domain,          // argument outside the function's domain
  disconnected,
  flip_precondition,
  nontermination,
  loop,
  duplicate_edge,
  same_face,       // bridge requested within a single face
  simplicity,
  index,           // current graph with more than one face
  classification,  // vortex matches no type
  derivation,
  vortex_accounting,
  range,           // family parameter below its smallest member
  fixture,
  pipeline,
  parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace mapcolor
