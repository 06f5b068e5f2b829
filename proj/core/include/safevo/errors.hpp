#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace safevo {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Caller handed in something outside an operation's domain (unknown state,
// invalid configuration, ...).
class UsageError : public Error {
public:
  using Error::Error;
};

class ConfigError : public UsageError {
public:
  using UsageError::UsageError;
};

// Syntax or semantic error in FSM text or a property. `location` is a
// 1-based line number for FSM text and a 1-based column for properties.
class ParseError : public Error {
public:
  ParseError(std::size_t location, const std::string& what)
      : Error(what), location_(location) {}

  std::size_t location() const noexcept { return location_; }

private:
  std::size_t location_;
};

// Controller and plant alphabets do not line up.
class CompositionError : public Error {
public:
  using Error::Error;
};

// A property mentions an atom the model does not define.
class PropertyMismatchError : public Error {
public:
  using Error::Error;
};

}  // namespace safevo
