#pragma once

#include <stdexcept>
#include <string>

namespace k3fib {

// Machine-readable failure classes surfaced by the library.  Each one
// corresponds to a documented contract violation or structural obstruction;
// plain std::logic_error / std::invalid_argument are reserved for programmer
// misuse of the API itself.
enum class Errc {
  parse_error,            // malformed input text (JSON or polynomial grammar)
  schema_violation,       // well-formed JSON with the wrong shape
  sigma_not_injective,    // det of the degree-two comparison matrix vanishes
  non_cyclic_cokernel,    // more than one nontrivial invariant factor
  beta_degenerate,        // the degree-six datum dies in the quotient algebra
  degenerate_fibre,       // fibre quadric has rank < 2, no normal form exists
  not_isolated,           // Jacobian colength did not stabilise under the cap
  unit_leading_required,  // reduction attempted against a non-unit leading coefficient
  internal,               // invariant breakage inside the library
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

// Input text could not be tokenised or parsed.  `offset` is a 0-based byte
// position into the offending string; `field` names the JSON field (or other
// source) the string came from, when known.
class ParseError : public Error {
public:
  ParseError(std::string message, std::size_t offset, std::string field = {})
      : Error(Errc::parse_error, std::move(message)),
        offset_(offset),
        field_(std::move(field)) {}

  std::size_t offset() const { return offset_; }
  const std::string& field() const { return field_; }

private:
  std::size_t offset_;
  std::string field_;
};

[[noreturn]] inline void throw_internal(const std::string& what) {
  throw Error(Errc::internal, "internal invariant violated: " + what);
}

}  // namespace k3fib
