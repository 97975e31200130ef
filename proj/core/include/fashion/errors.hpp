#pragma once

#include <stdexcept>
#include <string>

namespace fashion {

/// Bad argument or misuse of an operation (maps to CLI exit code 1).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Filesystem / stream failure (maps to CLI exit code 2).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance exceeds an exhaustive-search size limit.
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fashion
