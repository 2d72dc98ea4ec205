#pragma once

#include <stdexcept>
#include <string>

namespace sbrace {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Io,
  NotAssociative,
  NoIdentityAtZero,
  NotLatinSquare,
  DotNotGroup,
  CircNotGroup,
  BraceAxiomFails,
  NotNormal,
  NotClosed,
  NotIdeal,
  NotBraceHom,
  ArityMismatch,
  NotInClassIn,
  BadIdeals,
  DiagramFails,
  WitnessInvalid,
  NotAbelianCoefficients,
  IdentityFails,
  NotInsideAnnihilator,
  ModulusTooSmall,
  QuotientMismatch,
  HypothesisUnmet,
  Overflow,
  BudgetExceeded,
  InternalDisagreement,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Consistency check between two independent computations of the same object.
inline void agree(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InternalDisagreement, what);
}

}  // namespace sbrace
