#pragma once

#include <stdexcept>
#include <string>

namespace jl {

// All library failures carry a short machine-readable code plus a human
// message.  Codes are stable API; the CLI and C API surface them verbatim.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

namespace errcode {
inline constexpr const char* syntax = "SyntaxError";
inline constexpr const char* domain = "Domain";
inline constexpr const char* dimension = "DimensionMismatch";
inline constexpr const char* overflow = "Overflow";
inline constexpr const char* zero_root = "ZeroRoot";
inline constexpr const char* near_zero = "NearZeroOnCircle";
inline constexpr const char* adaptivity = "AdaptivityExceeded";
inline constexpr const char* budget = "InvalidBudget";
inline constexpr const char* non_unimodular = "NonUnimodular";
inline constexpr const char* bad_input = "BadInput";
inline constexpr const char* internal = "Internal";
}  // namespace errcode

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace jl
