#include "icelab/errors.hpp"

namespace icelab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonzeroRemainder: return "NonzeroRemainder";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::PoleAtCenter: return "PoleAtCenter";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::PoleInPhi: return "PoleInPhi";
    case ErrorKind::PoleCollision: return "PoleCollision";
    case ErrorKind::CoincidingParameters: return "CoincidingParameters";
    case ErrorKind::WidthMismatch: return "WidthMismatch";
    case ErrorKind::PositionsOutOfRange: return "PositionsOutOfRange";
    case ErrorKind::JetOrderInsufficient: return "JetOrderInsufficient";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace icelab
