// Copyright 2026 The TransMI Authors
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
#include <utility>

namespace transmi {

/// Coarse failure categories. The CLI prints them as a machine-parsable
/// prefix ("error: <category>: <message>") and maps them to its exit status.
enum class ErrorCategory {
  kIo,        // file missing, unreadable, unwritable
  kParse,     // malformed document or rule file
  kValidate,  // well-formed input violating a documented invariant
  kUsage,     // bad command-line invocation
  kInternal,  // broken internal invariant
};

inline const char* to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kIo:
      return "io";
    case ErrorCategory::kParse:
      return "parse";
    case ErrorCategory::kValidate:
      return "validate";
    case ErrorCategory::kUsage:
      return "usage";
    case ErrorCategory::kInternal:
      return "internal";
  }
  return "internal";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string message)
      : std::runtime_error(std::move(message)), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

}  // namespace transmi
