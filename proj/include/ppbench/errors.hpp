// Copyright 2026 The ppbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PPBENCH_ERRORS_HPP_
#define PPBENCH_ERRORS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ppbench {

// Machine-readable failure categories. The string forms returned by
// ErrorCodeName() are part of the service's wire contract.
enum class ErrorCode {
  kInvalidArgument,
  kBudgetExceeded,
  kWeakKeyRejected,
  kPlaintextOutOfRange,
  kKeyMismatch,
  kPayloadLengthMismatch,
  kInvalidGroupElement,
  kUnwrapFailure,
  kWrongTagCount,
  kMissingInputs,
  kMissingReturns,
  kDecryptFailure,
  kPeerGroupTooSmall,
  kPhaseViolation,
  kUnknownSession,
  kDuplicateMessage,
  kSchemaViolation,
  kNotEnrolled,
  kCorruptLog,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);
std::optional<ErrorCode> ErrorCodeFromName(std::string_view name);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ppbench

#endif  // PPBENCH_ERRORS_HPP_
