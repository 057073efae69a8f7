#pragma once

#include <stdexcept>

namespace kgwell::cli {

/// Bad command-line or config-file input. The message names the offending field.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A file could not be read or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kgwell::cli
