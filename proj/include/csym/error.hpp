#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace csym {

enum class Errc {
  // usage / input
  Usage,
  SyntaxError,
  IndexOutOfRange,
  OutOfRange,
  DimensionMismatch,
  DivisionByZero,
  UnboundParameter,
  InconsistentConjugateBinding,
  UnknownModel,
  // model validation
  InvalidModel,
  NotIntegrable,
  NotClosedSquare,
  SingularParameter,
  StokesViolation,
  // computation preconditions
  NonSymmetric,
  NotTopDegree,
  NotInSpan,
  NotClosed,
  OddDimension,
  WrongBidegree,
  NotSymplectic,
  NotClosedRepresentative,
  UnnormalizedSigma,
  InvalidBasis,
  BasisNotConjugationStable,
  DdbarRequired,
  NotClosedTau,
  TargetOutOfRange,
  // internal inconsistencies
  NotInCohomology,
  NonRealEntry,
  DecompositionFailure,
  TheoremInconsistency,
};

const char* errc_name(Errc code) noexcept;

/// Process exit status for an error code: 1 usage, 2 validation, 3 inconsistency.
int exit_status(Errc code) noexcept;

struct Location {
  int line = 0;    // 1-based, 0 = unknown
  int column = 0;  // 1-based, 0 = unknown
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, Location where = {}, std::string subject = {})
      : std::runtime_error(message), code_(code), where_(where), subject_(std::move(subject)) {}

  Errc code() const noexcept { return code_; }
  const Location& where() const noexcept { return where_; }
  /// Generator the error is about ("f2", "w3"), empty otherwise.
  const std::string& subject() const noexcept { return subject_; }

 private:
  Errc code_;
  Location where_;
  std::string subject_;
};

}  // namespace csym
