#pragma once

#include <stdexcept>
#include <string>

namespace meshk0 {

// Base of every error raised by the core. The C API maps each subclass to a
// distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (triple syntax, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Arguments outside the domain of an operation (D3, E9, t=3 on A_n, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An invariant was requested where it is not defined (e.g. (b) for A1).
class UndefinedInvariantError : public Error {
 public:
  using Error::Error;
};

// Brute-force enumeration would exceed its configured guard.
class SizeError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Never expected in a correct build.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace meshk0
