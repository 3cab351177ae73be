// Copyright 2026 The graphshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphshare {

enum class ErrorKind {
  kInvalidArgument,
  kDimension,
  kUnsupportedCoding,
  kParse,
  kGuardExceeded,
  kInfeasible,
  kIneligible,
  kExcludedSecret,
  kMissingVariable,
  // Recovery-side failures: the pooled shares do not reconstruct a valid
  // secret (missing, forged or mismatched shares).
  kInvalidSecret,
  kInvalidKey,
  kInsufficientShares,
  kFingerprintMismatch,
};

inline std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kDimension: return "dimension";
    case ErrorKind::kUnsupportedCoding: return "coding-unsupported";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kGuardExceeded: return "guard-exceeded";
    case ErrorKind::kInfeasible: return "infeasible";
    case ErrorKind::kIneligible: return "ineligible";
    case ErrorKind::kExcludedSecret: return "excluded-secret";
    case ErrorKind::kMissingVariable: return "missing-variable";
    case ErrorKind::kInvalidSecret: return "invalid-secret";
    case ErrorKind::kInvalidKey: return "invalid-key";
    case ErrorKind::kInsufficientShares: return "insufficient-shares";
    case ErrorKind::kFingerprintMismatch: return "fingerprint-mismatch";
  }
  return "unknown";
}

inline bool IsRecoveryError(ErrorKind kind) {
  return kind == ErrorKind::kInvalidSecret || kind == ErrorKind::kInvalidKey ||
         kind == ErrorKind::kInsufficientShares ||
         kind == ErrorKind::kFingerprintMismatch;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace graphshare
