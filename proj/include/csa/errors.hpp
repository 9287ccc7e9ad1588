#pragma once

#include <stdexcept>
#include <string>

namespace csa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments or violated preconditions.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized data (truncated, wrong tag, unknown version...).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Duplicate registration.
class ConflictError : public Error {
 public:
  using Error::Error;
};

// A solver table would exceed its configured memory budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Operation on an empty ledger.
class EmptyError : public Error {
 public:
  using Error::Error;
};

}  // namespace csa
