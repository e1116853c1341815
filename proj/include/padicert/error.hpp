// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef PADICERT_ERROR_HPP
#define PADICERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace padicert {

// Every failure mode in the library has a stable code so that callers (and
// the C API) can dispatch without string matching.  Codes are grouped by the
// module that raises them, but any module may re-raise a lower one.
enum class ErrorCode {
  // generic
  InvalidArgument,
  Internal,
  // padic-core
  DivisionByZeroAtPrecision,
  NoSimpleRoot,
  NotASquare,
  OddValuation,
  PrecisionExhausted,
  // local-fields
  NotAOneUnit,
  HenselConditionFailed,
  // finite-fields
  SingularCurve,
  HasseViolation,
  NotOrdinary,
  NotInSubgroup,
  // cm-orders
  NotSplit,
  TraceMismatch,
  NoPrimaryRepresentative,
  NotCoprime,
  BadPrime,
  NotRepresentable,
  // curve-local
  NotInFormalGroup,
  WrongResidueClass,
  NotSimpleRoot,
  ConsistencyFailure,
  // certifier
  SplitAssumptionViolated,
  TorsionPoint,
  NotOnCurve,
  // survey
  BadDataset,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace padicert

#endif
