// Copyright 2026 The pairbound Authors.
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

#ifndef PAIRBOUND_ERROR_HPP_
#define PAIRBOUND_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pairbound {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kCarrierMismatch,
  kDomainViolation,
  kOddLength,
  kEmptyInput,
  kIndexRange,
  kInfeasibleWitness,
  kCapExceeded,
  // Raised only when a carrier law or the exchange engine itself is broken.
  kTheoremViolation,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Carries the full engine state at the point a justification failed.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& message, std::string state_dump)
      : Error(ErrorCode::kTheoremViolation, message),
        state_dump_(std::move(state_dump)) {}

  const std::string& state_dump() const noexcept { return state_dump_; }

 private:
  std::string state_dump_;
};

}  // namespace pairbound

#endif  // PAIRBOUND_ERROR_HPP_
