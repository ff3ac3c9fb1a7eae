#pragma once

#include <stdexcept>
#include <string>

namespace relax {

// Invalid user input (configs, malformed fields). Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Runtime numerical failure: CFL violation, subcharacteristic violation,
// solver breakdown, non-finite state. Maps to CLI exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace relax
