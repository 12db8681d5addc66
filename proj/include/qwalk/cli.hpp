// Copyright 2026 The qwalk developers
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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qwalk::cli {

// Exit codes shared by all subcommands.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 2;
inline constexpr int kResourceError = 3;
inline constexpr int kVerificationFailure = 4;

/// Entry point behind main(); parses `qwalk <subcommand> ...` and
/// dispatches.  Writes results to `out` and diagnostics to `err`.
int run_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace qwalk::cli
