#pragma once

#include <stdexcept>
#include <string>

namespace ehrelay {

// Malformed or inconsistent configuration input. CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// An exact-model instance exceeds the enumeration cap. CLI exit code 3.
class OracleSizeError : public std::runtime_error {
 public:
  explicit OracleSizeError(const std::string& what) : std::runtime_error(what) {}
};

// Runtime failure inside a simulation or solver. CLI exit code 2.
class SimulationError : public std::runtime_error {
 public:
  explicit SimulationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ehrelay
