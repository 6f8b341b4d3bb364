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


// Batch command-line front end.
//
//   bmfni solve   INSTANCE [--out F] [--threads N] [--fold left|right]
//   bmfni approx  INSTANCE --epsilon E [--out F] [--threads N]
//   bmfni oracle  INSTANCE [--out F] [--threads N] [--max-arcs M]
//   bmfni check   FRONT INSTANCE [--epsilon E] [--threads N] [--max-arcs M]
//   bmfni gen sp | hard-parallel | reduction [params] [--out F]
//   bmfni compare INSTANCE --epsilon E1,E2,... [--out F.csv]
//   bmfni knapsack INSTANCE [--out F]
//   bmfni reduce  KNAPSACK [--out F]
//   bmfni decide  INSTANCE [--threshold K1,K2] [--threads N]
//
// Exit codes: 0 ok, 1 usage, 2 parse or validation failure, 3 unmet
// precondition, 4 verification failure, 5 size guard. Failures print a JSON
// error object on standard error.

#ifndef BMFNI_CLI_H_
#define BMFNI_CLI_H_

#include <ostream>

namespace bmfni {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitVerification = 4;
inline constexpr int kExitTooLarge = 5;

inline constexpr const char* kCompareHeader =
    "m,U,B,epsilon,labels,front,covered,wall_ms";

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace bmfni

#endif  // BMFNI_CLI_H_
