// Copyright 2026 The qmcz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qmcz {

enum class ErrorCode {
  NonPrime,
  ReducibleModulus,
  DegreeMismatch,
  SpecMismatch,
  DivisionByZero,
  LengthMismatch,
  DegenerateCode,
  BudgetExceeded,
  AllOnesMissing,
  NotAutomorphism,
  MultiplicationTooWeak,
  DualDistanceTooSmall,
  BlockNotCoset,
  NonRegular,
  HypothesisViolated,
  LogicalColumnsDependent,
  IndependenceViolated,
  NoLogicalQudits,
  UnknownLabel,
  ArityMismatch,
  BlockMismatch,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

/// All recoverable failures surface as Error; the code identifies the
/// violated precondition and the message carries the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qmcz
