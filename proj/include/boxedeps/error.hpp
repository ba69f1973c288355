#pragma once

#include <stdexcept>
#include <string>

namespace boxedeps {

enum class ErrorCode {
  parse,
  overflow,
  division_by_zero,
  degenerate_divisor,
  name_with_space,
  empty_name,
  unknown_driver,
  manifest,
  invalid_argument,
};

// All core failures are reported through this exception; the C API maps
// `code()` onto bxe_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace boxedeps
