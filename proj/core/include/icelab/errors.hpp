#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace icelab {

enum class ErrorKind {
  NonzeroRemainder,
  ZeroConstantTerm,
  PoleAtCenter,
  PoleHit,
  PoleInPhi,
  PoleCollision,
  CoincidingParameters,
  WidthMismatch,
  PositionsOutOfRange,
  JetOrderInsufficient,
  InvalidArgument,
  ConfigError,
  SamplingExhausted,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// that reports can record where a check broke down.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace icelab
