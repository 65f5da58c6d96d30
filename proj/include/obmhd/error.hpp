#pragma once

#include <stdexcept>
#include <string>

namespace obmhd {

/// Argument outside the domain of a constitutive law or operator.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Invalid or inconsistent configuration (maps to CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Numerical breakdown during a run (maps to CLI exit code 3).
class NumericalError : public std::runtime_error {
public:
  enum class Kind { NonFinite, Positivity, Cfl };

  NumericalError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

}  // namespace obmhd
