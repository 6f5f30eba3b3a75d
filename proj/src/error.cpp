#include "csym/error.hpp"

namespace csym {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Usage: return "Usage";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::UnboundParameter: return "UnboundParameter";
    case Errc::InconsistentConjugateBinding: return "InconsistentConjugateBinding";
    case Errc::UnknownModel: return "UnknownModel";
    case Errc::InvalidModel: return "InvalidModel";
    case Errc::NotIntegrable: return "NotIntegrable";
    case Errc::NotClosedSquare: return "NotClosedSquare";
    case Errc::SingularParameter: return "SingularParameter";
    case Errc::StokesViolation: return "StokesViolation";
    case Errc::NonSymmetric: return "NonSymmetric";
    case Errc::NotTopDegree: return "NotTopDegree";
    case Errc::NotInSpan: return "NotInSpan";
    case Errc::NotClosed: return "NotClosed";
    case Errc::OddDimension: return "OddDimension";
    case Errc::WrongBidegree: return "WrongBidegree";
    case Errc::NotSymplectic: return "NotSymplectic";
    case Errc::NotClosedRepresentative: return "NotClosedRepresentative";
    case Errc::UnnormalizedSigma: return "UnnormalizedSigma";
    case Errc::InvalidBasis: return "InvalidBasis";
    case Errc::BasisNotConjugationStable: return "BasisNotConjugationStable";
    case Errc::DdbarRequired: return "DdbarRequired";
    case Errc::NotClosedTau: return "NotClosedTau";
    case Errc::TargetOutOfRange: return "TargetOutOfRange";
    case Errc::NotInCohomology: return "NotInCohomology";
    case Errc::NonRealEntry: return "NonRealEntry";
    case Errc::DecompositionFailure: return "DecompositionFailure";
    case Errc::TheoremInconsistency: return "TheoremInconsistency";
  }
  return "Unknown";
}

int exit_status(Errc code) noexcept {
  switch (code) {
    case Errc::Usage:
      return 1;
    case Errc::NotInCohomology:
    case Errc::NonRealEntry:
    case Errc::DecompositionFailure:
    case Errc::TheoremInconsistency:
      return 3;
    default:
      return 2;
  }
}

}  // namespace csym
