#include "cli/rational.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>

namespace kgwell::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view field, std::string_view text, std::string_view why) {
  throw ConfigError(std::string(field) + ": cannot parse '" + std::string(text) + "' (" + std::string(why) + ")");
}

template <class T>
bool parse_whole(std::string_view s, T& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

double parse_rational(std::string_view text, std::string_view field) {
  const std::string_view s = trim(text);
  if (s.empty()) fail(field, text, "empty value");
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    double v = 0.0;
    if (!parse_whole(s, v)) fail(field, text, "expected a number or p/q");
    if (!std::isfinite(v)) fail(field, text, "value is not finite");
    return v;
  }
  std::int64_t p = 0;
  std::int64_t q = 0;
  if (!parse_whole(trim(s.substr(0, slash)), p) || !parse_whole(trim(s.substr(slash + 1)), q)) {
    fail(field, text, "rational values need integer numerator and denominator");
  }
  if (q == 0) fail(field, text, "zero denominator");
  constexpr std::int64_t kExact = std::int64_t{1} << 53;
  if (std::abs(p) > kExact || std::abs(q) > kExact) fail(field, text, "numerator or denominator exceeds 2^53");
  return static_cast<double>(p) / static_cast<double>(q);
}

}  // namespace kgwell::cli
