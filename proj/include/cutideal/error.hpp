#pragma once

#include <stdexcept>
#include <string>

namespace cutideal {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (graph files, counts files, serialized sets).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A well-formed request that violates a mathematical precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed the configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace cutideal
