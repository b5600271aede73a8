#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace goodsg {

enum class ErrorKind {
  Usage,
  Parse,
  MissingZero,
  NoUniqueMaximum,
  NotAMonoid,
  G1Violation,
  G2Violation,
  ConductorNotMinimal,
  ConductorMismatch,
  NotInSemigroup,
  ZeroGenerator,
  NotGoodIdeal,
  NotProper,
  NotInComplement,
  InternalInconsistency,
  PreconditionViolated,
  MixedU,
  IndexNotInU,
  InvalidNumericalSemigroup,
  GenerationExhausted,
  GridTooLarge,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::MissingZero: return "MissingZero";
    case ErrorKind::NoUniqueMaximum: return "NoUniqueMaximum";
    case ErrorKind::NotAMonoid: return "NotAMonoid";
    case ErrorKind::G1Violation: return "G1Violation";
    case ErrorKind::G2Violation: return "G2Violation";
    case ErrorKind::ConductorNotMinimal: return "ConductorNotMinimal";
    case ErrorKind::ConductorMismatch: return "ConductorMismatch";
    case ErrorKind::NotInSemigroup: return "NotInSemigroup";
    case ErrorKind::ZeroGenerator: return "ZeroGenerator";
    case ErrorKind::NotGoodIdeal: return "NotGoodIdeal";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::NotInComplement: return "NotInComplement";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::MixedU: return "MixedU";
    case ErrorKind::IndexNotInU: return "IndexNotInU";
    case ErrorKind::InvalidNumericalSemigroup: return "InvalidNumericalSemigroup";
    case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    case ErrorKind::GridTooLarge: return "GridTooLarge";
  }
  return "Unknown";
}

/// Usage errors map to CLI exit code 2, everything else to 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace goodsg
