#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubicforge {

enum class Errc {
  ZeroPolynomial,
  DegenerateInput,
  PoleAtOrigin,
  GuessFailed,
  NonIntegralGF,
  UnboundSymbol,
  DefiniteForm,
  NoOrbitFound,
  DegenerateInitialVectors,
  ZeroB,
  ZeroResult,
  DegenerateMorph,
  MalformedTheorem,
  EliminationCollapse,
  SingularSubstitution,
  NoForm,
  NoTargetedForm,
  ParseError,
  InvalidArgument,
  InvariantViolation,
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::PoleAtOrigin: return "PoleAtOrigin";
    case Errc::GuessFailed: return "GuessFailed";
    case Errc::NonIntegralGF: return "NonIntegralGF";
    case Errc::UnboundSymbol: return "UnboundSymbol";
    case Errc::DefiniteForm: return "DefiniteForm";
    case Errc::NoOrbitFound: return "NoOrbitFound";
    case Errc::DegenerateInitialVectors: return "DegenerateInitialVectors";
    case Errc::ZeroB: return "ZeroB";
    case Errc::ZeroResult: return "ZeroResult";
    case Errc::DegenerateMorph: return "DegenerateMorph";
    case Errc::MalformedTheorem: return "MalformedTheorem";
    case Errc::EliminationCollapse: return "EliminationCollapse";
    case Errc::SingularSubstitution: return "SingularSubstitution";
    case Errc::NoForm: return "NoForm";
    case Errc::NoTargetedForm: return "NoTargetedForm";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

/// Base of every exception thrown by the library. `code()` identifies the
/// failure class; `what()` carries a human-readable message prefixed by it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  /// `position` is 1-based.
  ParseError(std::size_t position, const std::string& message)
      : Error(Errc::ParseError, "at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace cubicforge
