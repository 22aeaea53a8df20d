#pragma once

#include <stdexcept>
#include <string>

namespace hsindt {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: shape mismatch, index out of range, invalid parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed or unsupported file content (ENVI headers, PGM, config files).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Filesystem failures.
class IoError : public Error {
 public:
  using Error::Error;
};

// Statistics that cannot be formed: zero variance, every position dead.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

}  // namespace hsindt
