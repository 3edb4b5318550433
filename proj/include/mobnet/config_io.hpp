#pragma once

// Flat `key = value` configuration files with dotted section prefixes, e.g.
//
//   # proposed algorithm, default-scale run
//   mode = proposed
//   target = 120, 120
//   motion.xi1 = 0.8
//
// Vectors are comma separated, optionally bracketed. Unknown keys are
// rejected; missing keys keep their SimConfig defaults.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mobnet/config.hpp"

namespace mobnet {

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses and validates. Throws ConfigError (with line and key context) or
/// IoError.
SimConfig load_config(const std::filesystem::path& path);

/// Same as load_config on in-memory text; `origin` prefixes error messages.
SimConfig parse_config(std::string_view text, std::string_view origin = "<config>");

/// Every key with its current value, in a form parse_config accepts.
std::string format_config(const SimConfig& config);

/// "1,50,150" -> {1, 50, 150}. Throws ConfigError.
std::vector<std::size_t> parse_iteration_list(std::string_view text);

Mode parse_mode(std::string_view text);

}  // namespace mobnet
