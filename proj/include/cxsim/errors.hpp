#pragma once

#include <stdexcept>
#include <string>

namespace cxsim {

// Root of every error the library raises. The CLI maps subclasses to exit
// codes through `is_usage_error`.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A model parameter outside its domain (negative rate, non-positive scale, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Caller asked for something malformed: bad range, bad step, bad flag.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Input text could not be parsed as structured text at all.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Structured text parsed but does not follow the schema. `path` names the
// offending field, e.g. "events[0].fraction".
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Scenario failed validate_scenario.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A curve does not have the shape an operation requires (no interior peak,
// wrong number of crossings, ...).
class ShapeError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class CalibrationError : public Error {
 public:
  using Error::Error;
};

// A bracket search could not enclose the requested target.
class BracketError : public Error {
 public:
  BracketError(const std::string& what, double attained_low, double attained_high)
      : Error(what), low_(attained_low), high_(attained_high) {}
  double attained_low() const { return low_; }
  double attained_high() const { return high_; }

 private:
  double low_;
  double high_;
};

// Value to invert lies outside the baseline's ascending branch.
class RangeError : public Error {
 public:
  enum class Side { Below, Above };
  RangeError(Side side, const std::string& what) : Error(what), side_(side) {}
  Side side() const { return side_; }

 private:
  Side side_;
};

// Cognition parameters make the depth bracket E - l N N' non-positive.
class ConfigurationError : public Error {
 public:
  ConfigurationError(const std::string& what, double month) : Error(what), month_(month) {}
  double month() const { return month_; }

 private:
  double month_;
};

// Exact-integer request outside the supported size.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Enumeration request too large to iterate.
class ScaleError : public Error {
 public:
  using Error::Error;
};

inline bool is_usage_error(const Error& e) {
  return dynamic_cast<const UsageError*>(&e) != nullptr ||
         dynamic_cast<const ParseError*>(&e) != nullptr ||
         dynamic_cast<const SchemaError*>(&e) != nullptr ||
         dynamic_cast<const ValidationError*>(&e) != nullptr;
}

}  // namespace cxsim
