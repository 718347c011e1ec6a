// Copyright 2026 The precsimp Authors
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

#ifndef PRECSIMP_ERROR_HPP_
#define PRECSIMP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace precsimp {

enum class ErrorCode {
  kIndexOutOfRange,
  kNegativeSelfLoop,
  kInfeasibleSystem,
  kSameNode,
  kNotAWalk,
  kZeroWeightCycle,
  kNotASubset,
  kLimitExceeded,
  kExactLimitExceeded,
  kNodeCountMismatch,
  kParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception type; callers
// dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace precsimp

#endif  // PRECSIMP_ERROR_HPP_
