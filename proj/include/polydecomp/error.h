// Copyright 2026 The polydecomp Authors
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

#ifndef POLYDECOMP_ERROR_H_
#define POLYDECOMP_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace polydecomp {

enum class ErrorCode {
  kMalformedInput,
  kMalformedRational,
  kUnbounded,
  kNotFullDimensional,
  kNotSimple,
  kRedundantHalfSpace,
  kInvalidArgument,
  kGenericityFailure,
  kAssumptionViolated,
  kDegeneratePairing,
};

const char* ErrorCodeName(ErrorCode code);

// True for errors caused by violated mathematical preconditions of an
// operation (non-generic polarizing vector, non-admissible center) as opposed
// to malformed or invalid input.
bool IsPreconditionError(ErrorCode code);

// Thrown by every fallible operation in the library. `indices` carries the
// offending object ids (half-space index, vertex id, face ids, ...) so
// callers can report them without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<int> indices = {})
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        indices_(std::move(indices)) {}

  ErrorCode code() const { return code_; }
  const std::vector<int>& indices() const { return indices_; }

 private:
  ErrorCode code_;
  std::vector<int> indices_;
};

}  // namespace polydecomp

#endif  // POLYDECOMP_ERROR_H_
