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

#include "ppbench/errors.hpp"

namespace ppbench {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kBudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::kWeakKeyRejected: return "WEAK_KEY_REJECTED";
    case ErrorCode::kPlaintextOutOfRange: return "PLAINTEXT_OUT_OF_RANGE";
    case ErrorCode::kKeyMismatch: return "KEY_MISMATCH";
    case ErrorCode::kPayloadLengthMismatch: return "PAYLOAD_LENGTH_MISMATCH";
    case ErrorCode::kInvalidGroupElement: return "INVALID_GROUP_ELEMENT";
    case ErrorCode::kUnwrapFailure: return "UNWRAP_FAILURE";
    case ErrorCode::kWrongTagCount: return "WRONG_TAG_COUNT";
    case ErrorCode::kMissingInputs: return "MISSING_INPUTS";
    case ErrorCode::kMissingReturns: return "MISSING_RETURNS";
    case ErrorCode::kDecryptFailure: return "DECRYPT_FAILURE";
    case ErrorCode::kPeerGroupTooSmall: return "PEER_GROUP_TOO_SMALL";
    case ErrorCode::kPhaseViolation: return "PHASE_VIOLATION";
    case ErrorCode::kUnknownSession: return "UNKNOWN_SESSION";
    case ErrorCode::kDuplicateMessage: return "DUPLICATE_MESSAGE";
    case ErrorCode::kSchemaViolation: return "SCHEMA_VIOLATION";
    case ErrorCode::kNotEnrolled: return "NOT_ENROLLED";
    case ErrorCode::kCorruptLog: return "CORRUPT_LOG";
    case ErrorCode::kIoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

std::optional<ErrorCode> ErrorCodeFromName(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(ErrorCode::kIoError); ++i) {
    auto code = static_cast<ErrorCode>(i);
    if (ErrorCodeName(code) == name) return code;
  }
  return std::nullopt;
}

}  // namespace ppbench
