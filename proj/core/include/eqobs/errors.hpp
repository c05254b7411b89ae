#pragma once

#include <stdexcept>
#include <string>

namespace eqobs {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed textual input: group descriptions, element expressions, JSON files.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Structurally invalid data (failed invariants, mismatched groups, bad references).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A configured size bound was exceeded.
class BoundError : public Error {
public:
  using Error::Error;
};

/// 64-bit integer arithmetic overflowed; results are never wrapped silently.
class OverflowError : public Error {
public:
  using Error::Error;
};

} // namespace eqobs
