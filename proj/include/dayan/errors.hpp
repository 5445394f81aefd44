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

#include <stdexcept>
#include <string>

namespace dayan {

/// Bad user input or violated precondition. CLI maps these to exit code 1.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Argument outside an operation's declared domain (e.g. strict-mode x >= n1).
struct out_of_domain : validation_error {
    using validation_error::validation_error;
};

/// Coincident interpolation nodes.
struct invalid_nodes : validation_error {
    using validation_error::validation_error;
};

/// Solar model cannot be used as requested (e.g. non-monotone longitude).
struct invalid_model : validation_error {
    using validation_error::validation_error;
};

/// Parallel or diverging lines of sight in a gnomon survey.
struct degenerate_sightlines : validation_error {
    using validation_error::validation_error;
};

/// Island peak at or below the gnomon tips; shadows are undefined.
struct island_not_above_gnomon : validation_error {
    using validation_error::validation_error;
};

/// An iteration failed to converge. CLI maps these to exit code 2.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dayan
