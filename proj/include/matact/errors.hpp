// Copyright 2026 The Authors.
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

#ifndef MATACT_ERRORS_HPP
#define MATACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matact {

enum class ErrorCode {
  kEmptyBases,
  kMixedRank,
  kExchangeAxiomViolation,
  kRankOutOfRange,
  kElementOutsideGround,
  kNotNested,
  kNotABasis,
  kElementOnWrongSide,
  kEmptyGroundSet,
  kNotInternallyActive,
  kNotExternallyActive,
  kMinNotIncreasing,
  kEndpointMismatch,
  kSizeBoundExceeded,
  kNotConnectedFiltration,
  kPartNotUniactive,
  kPartNotABasisOfMinor,
  kGroundTooSmall,
  kNotABijection,
  kParseError,
  kUsageError,
  kInternalCheckFailed,
};

// Library-wide error type. The code identifies the contract violation; the
// message carries the offending data (sets, elements, line numbers).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace matact

#endif  // MATACT_ERRORS_HPP
