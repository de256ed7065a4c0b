// Copyright 2026 The histk Authors
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

#ifndef HISTK_ERROR_HPP_
#define HISTK_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace histk {

enum class ErrorCode {
  kInvalidInput,         // malformed graph, bad vertex id, self-loop, cycle
  kPrecondition,         // e.g. disconnected input where connectivity is required
  kHypothesisViolation,  // strict-mode degree hypothesis does not hold
  kInfeasibleParams,     // generator parameters admit no valid instance
  kUnsatisfiableParams,  // random generator could not hit the requested bound
  kNoSafeNeighbor,       // neighbour peeling ran out of non-cut neighbours
  kSurrogateFailed,      // high-degree solver gave up
  kConstructionFailed,   // a pipeline step could not be realised
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace histk

#endif  // HISTK_ERROR_HPP_
