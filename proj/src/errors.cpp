#include "arrfiber/errors.hpp"

namespace arrfiber {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::DuplicateLine: return "DuplicateLine";
    case ErrorKind::TooFewLines: return "TooFewLines";
    case ErrorKind::UnbalancedProfile: return "UnbalancedProfile";
    case ErrorKind::MultiplicityOutOfRange: return "MultiplicityOutOfRange";
    case ErrorKind::InvalidCount: return "InvalidCount";
    case ErrorKind::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::BetaOutOfRange: return "BetaOutOfRange";
    case ErrorKind::TermTooSmall: return "TermTooSmall";
    case ErrorKind::BadMultiplicity: return "BadMultiplicity";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorKind::NoetherDivisibilityFailure: return "NoetherDivisibilityFailure";
    case ErrorKind::NegativeHodgeNumber: return "NegativeHodgeNumber";
    case ErrorKind::ZeroSecondChern: return "ZeroSecondChern";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace arrfiber
