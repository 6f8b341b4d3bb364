// Copyright 2026 The BMFNI Authors
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

#ifndef BMFNI_ERRORS_H_
#define BMFNI_ERRORS_H_

#include <stdexcept>
#include <string>

namespace bmfni {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kValidation,
  kNotSeriesParallel,
  kDisconnected,
  kNonUnitCosts,
  kTooLarge,
  kNotParallelGraph,
  kOverflow,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bmfni

#endif  // BMFNI_ERRORS_H_
