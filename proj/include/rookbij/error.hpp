#pragma once

#include <stdexcept>

namespace rookbij {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input errors: the value handed in does not describe a valid object.
class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidBoard : public Error {
 public:
  using Error::Error;
};

class InvalidPlacement : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

// Domain errors: the input is well formed but lies outside the domain of
// the requested map.
class NotAvoider : public Error {
 public:
  using Error::Error;
};

class ReconstructionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace rookbij
