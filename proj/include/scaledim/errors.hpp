#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scaledim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or mismatched structures: bad index, object-list mismatch,
// duplicate names.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An enumeration exceeded its configured limit.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t produced)
      : Error(what), produced_(produced) {}
  std::size_t produced() const { return produced_; }

 private:
  std::size_t produced_;
};

// Invalid scaling configuration, e.g. an order-requiring scale kind on an
// unordered value domain.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// A value could not be interpreted by its scale.
class ScalingError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied specification is invalid: unknown attribute, non-extent
// member, non-covering chains.
class SpecError : public Error {
 public:
  using Error::Error;
};

// Input text could not be parsed. line() is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An operation was invoked outside of its stated contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace scaledim
