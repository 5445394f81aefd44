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

#include "dayan/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dayan/errors.hpp"
#include "dayan/haidao.hpp"
#include "dayan/interpolation.hpp"
#include "dayan/piecewise.hpp"
#include "dayan/plot.hpp"
#include "dayan/solar.hpp"
#include "dayan/table_io.hpp"

namespace dayan::cli {

namespace {

struct GlobalOptions {
    std::string format = "csv";
    std::string plot_path;

    TableFormat table_format() const {
        return format == "json" ? TableFormat::json : TableFormat::csv;
    }
};

void print_scalar(std::ostream& out, const GlobalOptions& g,
                  const std::string& key, double value) {
    if (g.table_format() == TableFormat::csv) {
        out << format_number(value) << '\n';
    } else {
        out << nlohmann::json{{key, value}}.dump() << '\n';
    }
}

void maybe_plot(const GlobalOptions& g, const PiecewiseParabola& pp,
                std::ostream& err) {
    if (g.plot_path.empty()) return;
    std::ofstream file(g.plot_path);
    if (!file) {
        throw validation_error("cannot write plot file '" + g.plot_path + "'");
    }
    write_svg_plot(file, pp);
    err << "wrote plot to " << g.plot_path << '\n';
}

void warn_if_plot_unused(const GlobalOptions& g, std::ostream& err) {
    if (!g.plot_path.empty()) {
        err << "note: --plot applies to solar subcommands only; ignored\n";
    }
}

TableFormat input_format_for(const std::string& path, const GlobalOptions& g) {
    if (path == "-") return g.table_format();
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        return TableFormat::json;
    }
    return TableFormat::csv;
}

TropicalYearTable load_table(const std::string& path, const GlobalOptions& g,
                             std::ostream& err) {
    const TableFormat fmt = input_format_for(path, g);
    TropicalYearTable table =
        path == "-" ? parse_qi_table(std::cin, fmt) : load_qi_table(path, fmt);
    if (std::abs(table.closure_defect()) > 1e-9) {
        err << "warning: table deviations sum to "
            << format_number(table.closure_defect())
            << " du instead of 0 (open table)\n";
    }
    return table;
}

QiDivisionMode parse_mode(const std::string& mode) {
    return mode == "ding" ? QiDivisionMode::ding : QiDivisionMode::ping;
}

// ---------------------------------------------------------------------------
// interp
// ---------------------------------------------------------------------------

struct InterpEvalArgs {
    double n1 = 0, n2 = 0, d1 = 0, d2 = 0, x = 0;
    bool strict = false;
    bool huangji = false;
    bool has_n2 = false;
};

int run_interp_eval(const InterpEvalArgs& a, const GlobalOptions& g,
                    std::ostream& out, std::ostream& err) {
    warn_if_plot_unused(g, err);
    const EvalDomain domain =
        a.strict ? EvalDomain::strict : EvalDomain::permissive;
    double value = 0.0;
    if (a.huangji) {
        if (a.has_n2 && a.n2 != a.n1) {
            throw validation_error(
                "--huangji uses equal intervals; omit --n2 or set it to --n1");
        }
        value = eval_huangji(a.n1, a.d1, a.d2, a.x, domain);
    } else {
        if (!a.has_n2) {
            throw validation_error("--n2 is required unless --huangji is set");
        }
        value = eval_dayan(QiPiece{a.n1, a.n2, a.d1, a.d2}, a.x, domain);
    }
    print_scalar(out, g, "value", value);
    return 0;
}

int run_interp_coeffs(const QiPiece& piece, const GlobalOptions& g,
                      std::ostream& out, std::ostream& err) {
    warn_if_plot_unused(g, err);
    const QuadraticPoly p = coefficients(piece);
    if (g.table_format() == TableFormat::csv) {
        out << "a0,a1,a2\n"
            << format_number(p.a0) << ',' << format_number(p.a1) << ','
            << format_number(p.a2) << '\n';
    } else {
        out << nlohmann::json{{"a0", p.a0}, {"a1", p.a1}, {"a2", p.a2}}.dump()
            << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// solar
// ---------------------------------------------------------------------------

struct SolarTableArgs {
    bool synthetic = false;
    double amplitude = 2.0;
    double year = 365.25;
    double phase = 0.0;
    std::string mode = "ping";
    std::string out_path;
};

int run_solar_table(const SolarTableArgs& a, const GlobalOptions& g,
                    std::ostream& out, std::ostream& err) {
    const SolarModel model{a.year, a.amplitude, a.phase};
    const TropicalYearTable table = make_qi_table(model, parse_mode(a.mode));

    if (a.out_path.empty()) {
        write_qi_table(out, table, g.table_format());
    } else {
        std::ofstream file(a.out_path);
        if (!file) {
            throw validation_error("cannot write table file '" + a.out_path +
                                   "'");
        }
        write_qi_table(file, table, g.table_format());
        err << "wrote table to " << a.out_path << '\n';
    }
    maybe_plot(g, build_piecewise(table), err);
    return 0;
}

struct SolarErrorArgs {
    std::string table_path;
    bool synthetic = false;
    double amplitude = 2.0;
    double year = 365.25;
    double phase = 0.0;
    std::string mode = "ping";
    std::string method = "both";
    int samples = 10000;
};

int run_solar_error(const SolarErrorArgs& a, const GlobalOptions& g,
                    std::ostream& out, std::ostream& err) {
    const SolarModel model{a.year, a.amplitude, a.phase};
    std::string mode_label;
    std::unique_ptr<TropicalYearTable> table;
    if (!a.table_path.empty()) {
        table = std::make_unique<TropicalYearTable>(
            load_table(a.table_path, g, err));
        mode_label = "file";
        if (std::abs(table->year_length() - model.year_length) > 1e-6) {
            err << "warning: table spans " << format_number(table->year_length())
                << " days but the reference model year is "
                << format_number(model.year_length) << " days\n";
        }
    } else if (a.synthetic) {
        table = std::make_unique<TropicalYearTable>(
            make_qi_table(model, parse_mode(a.mode)));
        mode_label = a.mode;
    } else {
        throw validation_error("give either --table FILE or --synthetic");
    }

    const PiecewiseParabola parabolic = build_piecewise(*table);
    std::vector<ErrorReportRow> rows;
    if (a.method == "linear" || a.method == "both") {
        const SweepResult r =
            error_sweep(model, build_piecewise_linear(*table), a.samples);
        rows.push_back(ErrorReportRow{"linear", mode_label, a.samples,
                                      r.max_abs_error, r.mean_abs_error});
    }
    if (a.method == "parabolic" || a.method == "both") {
        const SweepResult r = error_sweep(model, parabolic, a.samples);
        rows.push_back(ErrorReportRow{"parabolic", mode_label, a.samples,
                                      r.max_abs_error, r.mean_abs_error});
    }
    write_error_report(out, rows, g.table_format());
    maybe_plot(g, parabolic, err);
    return 0;
}

// ---------------------------------------------------------------------------
// haidao
// ---------------------------------------------------------------------------

int run_haidao_height(const GnomonSurvey& survey, const GlobalOptions& g,
                      std::ostream& out, std::ostream& err) {
    warn_if_plot_unused(g, err);
    print_scalar(out, g, "height", island_height(survey));
    return 0;
}

int run_haidao_simulate(const IslandScene& scene, const GlobalOptions& g,
                        std::ostream& out, std::ostream& err) {
    warn_if_plot_unused(g, err);
    const GnomonSurvey s = simulate_shadows(scene);
    if (g.table_format() == TableFormat::csv) {
        out << "gnomon_height,separation,front_shadow,rear_shadow\n"
            << format_number(s.gnomon_height) << ','
            << format_number(s.separation) << ','
            << format_number(s.front_shadow) << ','
            << format_number(s.rear_shadow) << '\n';
    } else {
        out << nlohmann::json{{"gnomon_height", s.gnomon_height},
                              {"separation", s.separation},
                              {"front_shadow", s.front_shadow},
                              {"rear_shadow", s.rear_shadow}}
                   .dump()
            << '\n';
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
    CLI::App app{
        "Historical Chinese calendrical interpolation and double-gnomon "
        "surveying"};
    app.name("dayan");
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--plot", global.plot_path,
                   "Write the piecewise deviation curve as an SVG figure "
                   "(solar subcommands)");

    // interp -------------------------------------------------------------
    auto* interp =
        app.add_subcommand("interp", "Per-piece quadratic interpolation");
    interp->require_subcommand(1);

    InterpEvalArgs ev;
    auto* interp_eval = interp->add_subcommand(
        "eval", "Evaluate the interpolant at local time x");
    interp_eval->add_option("--n1", ev.n1, "First qi length, days")->required();
    auto* n2_opt =
        interp_eval->add_option("--n2", ev.n2, "Second qi length, days");
    interp_eval->add_option("--d1", ev.d1, "Deviation over first qi, du")
        ->required();
    interp_eval->add_option("--d2", ev.d2, "Deviation over second qi, du")
        ->required();
    interp_eval->add_option("--x", ev.x, "Evaluation time, days")->required();
    interp_eval->add_flag("--strict", ev.strict,
                          "Enforce the historical domain 0 <= x < n1");
    interp_eval->add_flag("--huangji", ev.huangji,
                          "Equal-interval special case (n2 = n1)");

    QiPiece coeff_piece{};
    auto* interp_coeffs = interp->add_subcommand(
        "coeffs", "Print monomial coefficients a0 + a1*x + a2*x^2");
    interp_coeffs->add_option("--n1", coeff_piece.n1, "First qi length, days")
        ->required();
    interp_coeffs->add_option("--n2", coeff_piece.n2, "Second qi length, days")
        ->required();
    interp_coeffs->add_option("--d1", coeff_piece.d1, "Deviation, du")
        ->required();
    interp_coeffs->add_option("--d2", coeff_piece.d2, "Deviation, du")
        ->required();

    // solar ---------------------------------------------------------------
    auto* solar =
        app.add_subcommand("solar", "Synthetic true-sun tables and precision");
    solar->require_subcommand(1);

    SolarTableArgs ta;
    auto* solar_table =
        solar->add_subcommand("table", "Generate a 24-qi deviation table");
    solar_table->add_flag("--synthetic", ta.synthetic,
                          "Use the synthetic sine model (the only source)");
    solar_table->add_option("--amplitude", ta.amplitude,
                            "Equation-of-center amplitude, du")
        ->capture_default_str();
    solar_table->add_option("--year", ta.year, "Year length, days")
        ->capture_default_str();
    solar_table->add_option("--phase", ta.phase, "Winter-solstice offset, days")
        ->capture_default_str();
    solar_table->add_option("--mode", ta.mode, "Year division")
        ->check(CLI::IsMember({"ping", "ding"}))
        ->capture_default_str();
    solar_table->add_option("--out", ta.out_path,
                            "Write the table here instead of stdout");

    SolarErrorArgs ea;
    auto* solar_error = solar->add_subcommand(
        "error", "Interpolation error against the true-sun model");
    solar_error->add_option(
        "--table", ea.table_path,
        "Qi table file ('-' for stdin; .json parsed as JSON, else CSV)");
    solar_error->add_flag("--synthetic", ea.synthetic,
                          "Generate the table from the model instead");
    solar_error->add_option("--samples", ea.samples, "Sample count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    solar_error->add_option("--method", ea.method, "Scheme(s) to measure")
        ->check(CLI::IsMember({"linear", "parabolic", "both"}))
        ->capture_default_str();
    solar_error->add_option("--amplitude", ea.amplitude,
                            "Reference model amplitude, du")
        ->capture_default_str();
    solar_error->add_option("--year", ea.year, "Reference model year, days")
        ->capture_default_str();
    solar_error->add_option("--phase", ea.phase, "Reference model phase, days")
        ->capture_default_str();
    solar_error->add_option("--mode", ea.mode, "Division for --synthetic")
        ->check(CLI::IsMember({"ping", "ding"}))
        ->capture_default_str();

    // haidao ---------------------------------------------------------------
    auto* haidao =
        app.add_subcommand("haidao", "Sea-island double-gnomon measurement");
    haidao->require_subcommand(1);

    GnomonSurvey survey{};
    auto* haidao_height = haidao->add_subcommand(
        "height", "Island altitude from a double-gnomon survey");
    haidao_height->add_option("--gnomon", survey.gnomon_height, "Gnomon height")
        ->required();
    haidao_height->add_option("--sep", survey.separation, "Gnomon separation")
        ->required();
    haidao_height
        ->add_option("--front-shadow", survey.front_shadow,
                     "Shadow of the gnomon nearer the island")
        ->required();
    haidao_height
        ->add_option("--rear-shadow", survey.rear_shadow,
                     "Shadow of the farther gnomon")
        ->required();

    IslandScene scene{};
    auto* haidao_simulate = haidao->add_subcommand(
        "simulate", "Shadows cast by a known island and instrument");
    haidao_simulate->add_option("--height", scene.height, "Island altitude")
        ->required();
    haidao_simulate
        ->add_option("--distance", scene.distance,
                     "Front gnomon foot to island base")
        ->required();
    haidao_simulate->add_option("--gnomon", scene.gnomon_height, "Gnomon height")
        ->required();
    haidao_simulate->add_option("--sep", scene.separation, "Gnomon separation")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        ev.has_n2 = n2_opt->count() > 0;
        if (interp_eval->parsed()) return run_interp_eval(ev, global, out, err);
        if (interp_coeffs->parsed()) {
            return run_interp_coeffs(coeff_piece, global, out, err);
        }
        if (solar_table->parsed()) return run_solar_table(ta, global, out, err);
        if (solar_error->parsed()) return run_solar_error(ea, global, out, err);
        if (haidao_height->parsed()) {
            return run_haidao_height(survey, global, out, err);
        }
        if (haidao_simulate->parsed()) {
            return run_haidao_simulate(scene, global, out, err);
        }
        err << "error: no subcommand given\n";
        return 1;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const numerical_error& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("dayan");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dayan::cli
