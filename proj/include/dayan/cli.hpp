// Copyright 2026 The dayan Authors
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

namespace dayan::cli {

/**
 * Command-line front end. Returns the process exit code:
 *   0  success
 *   1  usage or validation error
 *   2  numerical failure
 *
 * Streams are injected so tests can capture output; main() passes
 * std::cout / std::cerr.
 */
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

/// Convenience overload: `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dayan::cli
