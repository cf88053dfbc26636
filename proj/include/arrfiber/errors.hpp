#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arrfiber {

enum class ErrorKind {
  // arrangement
  MalformedLine,
  ZeroForm,
  DuplicateLine,
  TooFewLines,
  UnbalancedProfile,
  MultiplicityOutOfRange,
  InvalidCount,
  UnknownCatalogName,
  BadParameter,
  LimitExceeded,
  // hjcf
  NotCoprime,
  BetaOutOfRange,
  TermTooSmall,
  // resolution / local
  BadMultiplicity,
  NotSymmetric,
  // verify
  SingularMatrix,
  NonIntegralCoefficient,
  // surface
  NoetherDivisibilityFailure,
  NegativeHodgeNumber,
  ZeroSecondChern,
  // internal consistency (a violated invariant, never user error)
  InternalError,
};

std::string_view error_name(ErrorKind kind) noexcept;

// All library failures are reported through this type; `name()` is the stable
// identifier printed by the CLI and raised by the Python bindings.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail);

// Largest line count / multiplicity accepted anywhere. Keeps every
// intermediate of the local formulas (at most ~d^2) inside int64.
inline constexpr long long kMaxLines = 1LL << 20;

}  // namespace arrfiber
