#pragma once

#include <stdexcept>
#include <string>

namespace padicmin {

enum class ErrorCode {
  kNotPrime,
  kPrecisionOutOfRange,
  kMismatchedOperands,
  kNotUnit,
  kDegeneratePolynomial,
  kMalformedInput,
  kBoundExceeded,
  kPrecondition,
  kNotFullCycle,
  kUnsupportedPrime,
};

const char* error_code_name(ErrorCode code) noexcept;

/// All library failures are reported through this exception; `code()` lets
/// callers (the CLI in particular) react without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace padicmin
