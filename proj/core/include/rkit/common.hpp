#pragma once

#include <stdexcept>
#include <string>

namespace rkit {

// Error taxonomy mirrored by the CLI exit codes:
//   ConfigError -> 2, StateError -> 3, IoError -> 4.
// Contract violations (bad shapes, out-of-range arguments) throw
// std::invalid_argument / ShapeError and surface as exit code 2.

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct StateError : std::runtime_error {
  explicit StateError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeError : std::invalid_argument {
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace rkit
