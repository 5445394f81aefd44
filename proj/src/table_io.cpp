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

#include "dayan/table_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "dayan/errors.hpp"

namespace dayan {

namespace {

constexpr const char* kCsvHeader = "qi_index,n_days,delta_du";

std::string trimmed(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trimmed(line.substr(start)));
            break;
        }
        fields.push_back(trimmed(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

double parse_double_field(const std::string& s, const std::string& where) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || s.empty()) {
        throw validation_error(where + ": cannot parse number from '" + s +
                               "'");
    }
    return v;
}

int parse_int_field(const std::string& s, const std::string& where) {
    int v = 0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || s.empty()) {
        throw validation_error(where + ": cannot parse integer from '" + s +
                               "'");
    }
    return v;
}

void check_row(const QiInterval& qi, int expected_index,
               const std::string& where) {
    if (qi.index != expected_index) {
        throw validation_error(
            where + ": qi_index " + std::to_string(qi.index) + ", expected " +
            std::to_string(expected_index) + " (indices must run 1..24 in order)");
    }
    if (!(std::isfinite(qi.n) && qi.n > 0.0)) {
        throw validation_error(where + ": n_days must be positive and finite");
    }
    if (!std::isfinite(qi.delta)) {
        throw validation_error(where + ": delta_du must be finite");
    }
}

TropicalYearTable parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trimmed(line) != kCsvHeader) {
        throw validation_error("line 1: expected header '" +
                               std::string(kCsvHeader) + "'");
    }

    std::vector<QiInterval> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trimmed(line).empty()) continue;  // tolerate trailing blank lines
        const std::string where = "line " + std::to_string(line_no);
        if (rows.size() >= static_cast<std::size_t>(TropicalYearTable::kQiCount)) {
            throw validation_error(where + ": more than 24 data rows");
        }
        const auto fields = split_fields(line);
        if (fields.size() != 3) {
            throw validation_error(where + ": expected 3 fields, got " +
                                   std::to_string(fields.size()));
        }
        QiInterval qi{parse_int_field(fields[0], where),
                      parse_double_field(fields[1], where),
                      parse_double_field(fields[2], where)};
        check_row(qi, static_cast<int>(rows.size()) + 1, where);
        rows.push_back(qi);
    }
    if (rows.size() != static_cast<std::size_t>(TropicalYearTable::kQiCount)) {
        throw validation_error("expected 24 data rows, got " +
                               std::to_string(rows.size()));
    }
    return TropicalYearTable(std::move(rows));
}

TropicalYearTable parse_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw validation_error("top-level JSON value must be an array");
    }
    if (doc.size() != static_cast<std::size_t>(TropicalYearTable::kQiCount)) {
        throw validation_error("expected 24 entries, got " +
                               std::to_string(doc.size()));
    }
    std::vector<QiInterval> rows;
    rows.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const std::string where = "entry " + std::to_string(i + 1);
        const auto& obj = doc[i];
        if (!obj.is_object() || !obj.contains("qi_index") ||
            !obj.contains("n_days") || !obj.contains("delta_du")) {
            throw validation_error(
                where + ": expected object with qi_index, n_days, delta_du");
        }
        if (!obj["qi_index"].is_number_integer() ||
            !obj["n_days"].is_number() || !obj["delta_du"].is_number()) {
            throw validation_error(where + ": fields must be numeric");
        }
        QiInterval qi{obj["qi_index"].get<int>(), obj["n_days"].get<double>(),
                      obj["delta_du"].get<double>()};
        check_row(qi, static_cast<int>(i) + 1, where);
        rows.push_back(qi);
    }
    return TropicalYearTable(std::move(rows));
}

}  // namespace

std::string format_number(double v) {
    if (v == 0.0) return "0";  // avoid "-0"
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

TropicalYearTable parse_qi_table(std::istream& in, TableFormat format) {
    return format == TableFormat::csv ? parse_csv(in) : parse_json(in);
}

TropicalYearTable load_qi_table(const std::string& path, TableFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw validation_error("cannot open table file '" + path + "'");
    }
    return parse_qi_table(in, format);
}

void write_qi_table(std::ostream& out, const TropicalYearTable& table,
                    TableFormat format) {
    if (format == TableFormat::csv) {
        out << kCsvHeader << '\n';
        for (const QiInterval& qi : table.intervals()) {
            out << qi.index << ',' << format_number(qi.n) << ','
                << format_number(qi.delta) << '\n';
        }
    } else {
        nlohmann::json doc = nlohmann::json::array();
        for (const QiInterval& qi : table.intervals()) {
            doc.push_back({{"qi_index", qi.index},
                           {"n_days", qi.n},
                           {"delta_du", qi.delta}});
        }
        out << doc.dump() << '\n';
    }
}

void write_error_report(std::ostream& out,
                        const std::vector<ErrorReportRow>& rows,
                        TableFormat format) {
    if (format == TableFormat::csv) {
        out << "method,mode,samples,max_abs,mean_abs\n";
        for (const ErrorReportRow& r : rows) {
            out << r.method << ',' << r.mode << ',' << r.samples << ','
                << format_number(r.max_abs) << ',' << format_number(r.mean_abs)
                << '\n';
        }
    } else {
        nlohmann::json doc = nlohmann::json::array();
        for (const ErrorReportRow& r : rows) {
            doc.push_back({{"method", r.method},
                           {"mode", r.mode},
                           {"samples", r.samples},
                           {"max_abs", r.max_abs},
                           {"mean_abs", r.mean_abs}});
        }
        out << doc.dump() << '\n';
    }
}

}  // namespace dayan
