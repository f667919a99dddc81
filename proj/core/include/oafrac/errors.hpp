#pragma once

#include <stdexcept>
#include <string>

namespace oafrac {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or ill-valued design data: bad file syntax, out-of-range levels,
// duplicated runs (a non-simple design), inconsistent equation systems.
class InvalidDesignError : public Error {
 public:
  using Error::Error;
};

// An operation was invoked outside its domain (empty factor subset, mismatched
// parents, non-regular input to a pencil operation, and so on).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size bound was exceeded before starting an enumeration-heavy
// computation.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// A floating-point intermediate could not be reconstructed to an exact value
// within tolerance. Never silently rounded.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace oafrac
