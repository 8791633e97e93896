#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permsieve {

enum class Errc {
  EmptyInput,
  NotAPermutation,
  SizeMismatch,
  CodeOutOfRange,
  WidthOutOfRange,
  IndexOutOfRange,
  ParityViolation,
  WeightOutOfRange,
  NoPreimage,
  NotABijection,
  NotAnInvolution,
  UnknownKey,
  InvalidArgument,
  Overflow,
  CacheCorrupt,
  IoFailure,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI, the scan harness) can react without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace permsieve
