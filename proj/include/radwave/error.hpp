#pragma once

#include <stdexcept>
#include <string>

namespace radwave {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or configuration values.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Initial support plus propagation distance does not fit inside the grid.
class DomainTooSmall : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// A resampling request reaches outside the source grid.
class OutOfDomain : public Error {
public:
  using Error::Error;
};

/// The nonlinear step ceiling fell below the configured floor.
class StiffnessCollapse : public Error {
public:
  StiffnessCollapse(const std::string& what, double t) : Error(what), time(t) {}
  double time;
};

/// A non-finite sample or an exploding velocity was produced.
class BlowUpDetected : public Error {
public:
  BlowUpDetected(const std::string& what, double t) : Error(what), time(t) {}
  double time;
};

/// Configuration text error, addressed by line (0 when not line specific).
class ConfigError : public ValidationError {
public:
  ConfigError(int line, const std::string& what)
      : ValidationError(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line(line) {}
  int line;
};

/// Filesystem failure while writing reports.
class IoError : public Error {
public:
  using Error::Error;
};

} // namespace radwave
