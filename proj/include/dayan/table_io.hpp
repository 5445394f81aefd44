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

#include "dayan/piecewise.hpp"
#include "dayan/solar.hpp"

namespace dayan {

enum class TableFormat { csv, json };

/// Human-facing number rendering: 12 significant digits, locale-free.
std::string format_number(double v);

/**
 * Reads a qi table.
 *
 * CSV: mandatory header `qi_index,n_days,delta_du`, then exactly 24 data
 * rows. JSON: an array of 24 objects with the same keys. Malformed
 * input throws validation_error naming the offending line or entry.
 * Closure (sum of delta_du near zero) is NOT checked here; callers
 * query TropicalYearTable::closure_defect() and warn as appropriate.
 */
TropicalYearTable parse_qi_table(std::istream& in, TableFormat format);

/// Opens `path` and parses it. Throws validation_error if unreadable.
TropicalYearTable load_qi_table(const std::string& path, TableFormat format);

/// Serializes a table in the schema parse_qi_table reads. CSV numbers
/// use format_number; JSON carries full-precision doubles, so a
/// write/parse round trip is lossless.
void write_qi_table(std::ostream& out, const TropicalYearTable& table,
                    TableFormat format);

/// One line of an interpolation-error report.
struct ErrorReportRow {
    std::string method;  ///< "linear" or "parabolic"
    std::string mode;    ///< "ping", "ding", or "file"
    int samples;
    double max_abs;   ///< du
    double mean_abs;  ///< du
};

void write_error_report(std::ostream& out,
                        const std::vector<ErrorReportRow>& rows,
                        TableFormat format);

}  // namespace dayan
