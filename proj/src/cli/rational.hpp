#pragma once

#include <string_view>

#include "cli/cli_errors.hpp"

namespace kgwell::cli {

/// Parses "p/q" with integer p, q (exact integers, one rounding in the
/// division) or a plain decimal such as "0.98" or "-1.5e-3".
/// Throws ConfigError mentioning `field` on malformed input or q = 0.
double parse_rational(std::string_view text, std::string_view field);

}  // namespace kgwell::cli
