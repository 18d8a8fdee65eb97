#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Reference to something a logic does not have: unknown connective, atom
/// without a value, value outside the admissible set, wrong arity.
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// Rejected logic definition or claims manifest.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace mvlab
