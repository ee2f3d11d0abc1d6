// Copyright 2026 The lusq Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace lusq::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,        ///< success, or entanglement certified
  kInconclusive = 1,   ///< witness inconclusive, or invariance deviation exceeded
  kInputError = 2,     ///< unreadable or malformed input, bad flags
  kInvariantError = 3  ///< input violates a state invariant
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lusq::cli
