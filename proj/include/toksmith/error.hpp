#pragma once

#include <stdexcept>
#include <string>

namespace toksmith {

// Base class for every error raised by the library. The CLI prints
// what() after an "error: " prefix.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters: bad regex, vocab < 256, mix weights not summing to 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

class DecodeError : public Error {
 public:
  using Error::Error;
};

// Malformed file contents. Messages carry the offending field path.
class ParseError : public Error {
 public:
  using Error::Error;
};

class UnsupportedVersionError : public ParseError {
 public:
  using ParseError::ParseError;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class FitError : public Error {
 public:
  using Error::Error;
};

// A pluggable component (e.g. a healing scorer) broke its contract.
class InterfaceError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace toksmith
