// Copyright 2026 The combsel Authors.
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

#ifndef COMBSEL_CORE_ERROR_HPP_
#define COMBSEL_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace combsel {

enum class ErrorCode {
  kInvalidArgument,
  kIo,
  kNumeric,
  kStage,
};

// Base exception for every failure raised by the library. The C API maps the
// code onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline Error InvalidArgument(const std::string& message) {
  return Error(ErrorCode::kInvalidArgument, message);
}

inline Error IoError(const std::string& message) {
  return Error(ErrorCode::kIo, message);
}

inline Error NumericError(const std::string& message) {
  return Error(ErrorCode::kNumeric, message);
}

}  // namespace combsel

#endif  // COMBSEL_CORE_ERROR_HPP_
