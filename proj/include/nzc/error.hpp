// Copyright 2026 The nzc Authors
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

#ifndef NZC_ERROR_HPP_
#define NZC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace nzc {

enum class ErrorKind {
  kInvalidArgument,
  kCapExceeded,
  kUnsupportedQ,
  kPrecondition,
  kOutOfRange,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kCapExceeded: return "cap-exceeded";
    case ErrorKind::kUnsupportedQ: return "unsupported-q";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kOutOfRange: return "out-of-range";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nzc

#endif  // NZC_ERROR_HPP_
