#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cwe {

enum class ErrorCode {
  NotPrime,
  EvenCharacteristic,
  DegreeTooSmall,
  SizeCapExceeded,
  BudgetExceeded,
  DivisionByZero,
  MixedFieldContexts,
  MixedRootOrder,
  InvalidModulus,
  InvalidArgument,
  ZeroLeadingCoefficient,
  EmptyConstraint,
  RhoZero,
  NonPowerCodewordCount,
  FrequencyMismatch,
  NotRepresentable,
  Overflow,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for bad user input (as opposed to resource limits or internal
  /// consistency failures).
  bool is_input_error() const noexcept;
  bool is_resource_error() const noexcept {
    return code_ == ErrorCode::SizeCapExceeded || code_ == ErrorCode::BudgetExceeded;
  }

 private:
  ErrorCode code_;
};

}  // namespace cwe
