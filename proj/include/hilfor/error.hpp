#pragma once

#include <stdexcept>
#include <string>

namespace hilfor {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input: bad indices, tables of the wrong shape,
// arguments that fail their documented preconditions.
struct InputError : Error {
  using Error::Error;
};

// Input is well-formed but lies outside the mathematical domain of the
// operation (for example, a dual space was requested for an algebra whose
// spectrum is not a forest).
struct DomainError : Error {
  using Error::Error;
};

// A configured search or size cap was exceeded.
struct ResourceError : Error {
  using Error::Error;
};

// An invariant the library itself guarantees failed to hold. Seeing this
// means a bug, or a counterexample to something the code relies on.
struct InternalError : Error {
  using Error::Error;
};

// Text input could not be parsed; carries the 1-based line number.
struct ParseError : InputError {
  ParseError(int line_, const std::string& what_)
      : InputError("line " + std::to_string(line_) + ": " + what_), line(line_) {}
  int line;
};

}  // namespace hilfor
