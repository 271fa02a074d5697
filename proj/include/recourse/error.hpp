// Copyright 2026 The Recourse Matching Authors
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

#ifndef RECOURSE_ERROR_HPP_
#define RECOURSE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace recourse {

enum class ErrorCode {
  kDuplicateEdge,
  kSelfLoop,
  kUnknownEdge,
  kUnknownVertex,
  kLimitedDepartureViolation,
  kBlockedPath,
  kNotAugmenting,
  kBlockedComponent,
  kNotAMatching,
  kTooLarge,
  kBadK,
  kOddBudget,
  kNegativeEndpointWeight,
  kDivisionByZero,
  kBadInterval,
  kBadParams,
  kEpsilonTooLarge,
  kIllegalTransition,
  kZeroAlg,
  kIllegalEvent,
  kParse,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; `code()` lets callers and
// tests distinguish the contract violation without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace recourse

#endif  // RECOURSE_ERROR_HPP_
