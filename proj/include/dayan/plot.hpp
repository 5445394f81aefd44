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

#include "dayan/piecewise.hpp"

namespace dayan {

/// Renders accumulated deviation (du) against day of year as a static
/// SVG figure: the sampled curve plus markers at the qi breakpoints.
void write_svg_plot(std::ostream& out, const PiecewiseParabola& pp,
                    int samples = 720);

}  // namespace dayan
