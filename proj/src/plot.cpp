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

#include "dayan/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "dayan/errors.hpp"

namespace dayan {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 56.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

void write_svg_plot(std::ostream& out, const PiecewiseParabola& pp,
                    int samples) {
    if (samples < 2) {
        throw validation_error("plot needs at least 2 samples");
    }
    const double year = pp.year_length();

    std::vector<double> ts(static_cast<std::size_t>(samples) + 1);
    std::vector<double> vs(ts.size());
    double vmin = 0.0;
    double vmax = 0.0;
    for (std::size_t j = 0; j < ts.size(); ++j) {
        ts[j] = static_cast<double>(j) * year / samples;
        vs[j] = eval_piecewise(pp, ts[j]);
        vmin = std::min(vmin, vs[j]);
        vmax = std::max(vmax, vs[j]);
    }
    if (vmax - vmin < 1e-12) vmax = vmin + 1.0;  // flat curve still plots
    const double pad = 0.05 * (vmax - vmin);
    vmin -= pad;
    vmax += pad;

    const auto sx = [&](double t) {
        return kMargin + (t / year) * (kWidth - 2.0 * kMargin);
    };
    const auto sy = [&](double v) {
        return kHeight - kMargin -
               ((v - vmin) / (vmax - vmin)) * (kHeight - 2.0 * kMargin);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
        << kHeight << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Axes: time along the bottom, zero-deviation line if in range.
    out << "  <line x1=\"" << num(kMargin) << "\" y1=\"" << num(kHeight - kMargin)
        << "\" x2=\"" << num(kWidth - kMargin) << "\" y2=\""
        << num(kHeight - kMargin) << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << num(kMargin) << "\" y1=\"" << num(kMargin)
        << "\" x2=\"" << num(kMargin) << "\" y2=\"" << num(kHeight - kMargin)
        << "\" stroke=\"black\"/>\n";
    if (vmin < 0.0 && vmax > 0.0) {
        out << "  <line x1=\"" << num(kMargin) << "\" y1=\"" << num(sy(0.0))
            << "\" x2=\"" << num(kWidth - kMargin) << "\" y2=\"" << num(sy(0.0))
            << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
    }
    out << "  <text x=\"" << num(kWidth / 2.0) << "\" y=\""
        << num(kHeight - kMargin / 4.0)
        << "\" text-anchor=\"middle\" font-size=\"13\">day of year</text>\n";
    out << "  <text x=\"" << num(kMargin / 3.0) << "\" y=\"" << num(kHeight / 2.0)
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 "
        << num(kMargin / 3.0) << ' ' << num(kHeight / 2.0)
        << ")\">accumulated deviation (du)</text>\n";

    // Tick labels at both axis ends.
    out << "  <text x=\"" << num(kMargin) << "\" y=\""
        << num(kHeight - kMargin + 16.0)
        << "\" text-anchor=\"middle\" font-size=\"11\">0</text>\n";
    out << "  <text x=\"" << num(kWidth - kMargin) << "\" y=\""
        << num(kHeight - kMargin + 16.0)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << num(year)
        << "</text>\n";
    out << "  <text x=\"" << num(kMargin - 6.0) << "\" y=\"" << num(sy(vmin) + 4.0)
        << "\" text-anchor=\"end\" font-size=\"11\">" << num(vmin)
        << "</text>\n";
    out << "  <text x=\"" << num(kMargin - 6.0) << "\" y=\"" << num(sy(vmax) + 4.0)
        << "\" text-anchor=\"end\" font-size=\"11\">" << num(vmax)
        << "</text>\n";

    out << "  <polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" "
           "points=\"";
    for (std::size_t j = 0; j < ts.size(); ++j) {
        if (j) out << ' ';
        out << num(sx(ts[j])) << ',' << num(sy(vs[j]));
    }
    out << "\"/>\n";

    // Qi breakpoints.
    const auto& bp = pp.breakpoints();
    for (std::size_t i = 0; i < bp.size(); ++i) {
        const double v = eval_piecewise(pp, std::min(bp[i], year));
        out << "  <circle cx=\"" << num(sx(bp[i])) << "\" cy=\"" << num(sy(v))
            << "\" r=\"2.5\" fill=\"#c23b22\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace dayan
