// Copyright 2026 The davoid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "davoid/cli.hpp"

#include "davoid/concentration.hpp"
#include "davoid/construction.hpp"
#include "davoid/errors.hpp"
#include "davoid/figure.hpp"
#include "davoid/report.hpp"
#include "davoid/sampling.hpp"
#include "davoid/volume.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace davoid::cli
{
namespace
{

// Output location or format problems: exit 2.
class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Output
{
    std::string format = "text";
    std::string path;
};

Format parse_format(const std::string& name)
{
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    return Format::text;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << content;
    file.close();
    if (!file) throw IoError("failed writing '" + path + "'");
}

void emit(const Report& report, const Output& output, std::ostream& out)
{
    const std::string text = render(report, parse_format(output.format));
    if (output.path.empty()) {
        out << text;
    } else {
        write_file(output.path, text);
    }
}

double default_tolerance()
{
    const char* env = std::getenv(kToleranceEnv);
    if (env == nullptr || *env == '\0') return kDefaultTolerance;
    const std::string_view text(env);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw DomainError(std::string(kToleranceEnv) + " is not a number: '" + env + "'");
    }
    return value;
}

double resolve_tolerance(const std::optional<double>& flag)
{
    const double tol = flag ? *flag : default_tolerance();
    if (!(tol >= 1e-14 && tol <= 1e-6)) throw DomainError("tolerance must lie in [1e-14, 1e-6]");
    return tol;
}

VolumeMethod parse_method(const std::string& name)
{
    if (name == "quadrature") return VolumeMethod::quadrature;
    if (name == "lower-bound") return VolumeMethod::lower_bound;
    return VolumeMethod::closed_form;
}

Cell opt_cell(const std::optional<double>& v)
{
    if (v) return *v;
    return std::monostate{};
}

std::int64_t i64(std::uint64_t v)
{
    return static_cast<std::int64_t>(v);
}

// ---------------------------------------------------------------- ratio

struct RatioOptions
{
    int n = 2;
    std::optional<double> a;
    std::string method = "quadrature";
    std::optional<double> tol;
};

Report cmd_ratio(const RatioOptions& o)
{
    const double a = o.a.value_or(canonical_offset());
    const ConstructionParams params(o.n, a);
    const double tol = resolve_tolerance(o.tol);
    const VolumeMethod method = parse_method(o.method);

    const RatioRow row = ratio_S(params, method, tol);
    const RatioRow quad = method == VolumeMethod::quadrature ? row : ratio_S(params, VolumeMethod::quadrature, tol);
    const RatioRow closed = method == VolumeMethod::closed_form ? row : ratio_S(params, VolumeMethod::closed_form);
    const double agreement = std::fabs(std::expm1(quad.log_ratio - closed.log_ratio));

    Report report;
    report.command = "ratio";
    report.inputs = {{"n", std::int64_t{o.n}}, {"a", a}, {"method", o.method}, {"tol", tol}};
    report.results = {
        {"ratio", row.ratio},
        {"scaled", row.scaled},
        {"margin", row.margin},
        {"log_ratio", row.log_ratio},
        {"quadrature_ratio", quad.ratio},
        {"closed_form_ratio", closed.ratio},
        {"relative_agreement", agreement},
    };
    report.pass = row.margin > 0.0;
    return report;
}

// ---------------------------------------------------------------- table

struct TableOptions
{
    int min_n = 2;
    int max_n = 64;
    std::optional<double> a;
    std::string method = "closed-form";
    std::optional<double> tol;
};

Report cmd_table(const TableOptions& o)
{
    if (o.max_n < 2 || o.min_n < 2 || o.min_n > o.max_n || o.max_n > 10000) {
        throw DomainError("table needs 2 <= min-n <= max-n <= 10000");
    }
    const double a = o.a.value_or(canonical_offset());
    const double tol = resolve_tolerance(o.tol);
    const std::vector<RatioRow> rows = ratio_table(o.min_n, o.max_n, a, parse_method(o.method), tol);

    Table table;
    table.columns = {"n", "ratio", "scaled", "margin"};
    bool all_positive = true;
    bool increasing = true;
    bool bounded = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const RatioRow& r = rows[i];
        table.rows.push_back({std::int64_t{r.n}, r.ratio, r.scaled, r.margin});
        all_positive = all_positive && r.margin > 0.0;
        bounded = bounded && r.scaled > 1.0 && r.scaled < 2.0;
        if (i > 0) increasing = increasing && r.scaled > rows[i - 1].scaled;
    }

    Report report;
    report.command = "table";
    report.inputs = {{"min_n", std::int64_t{o.min_n}}, {"max_n", std::int64_t{o.max_n}}, {"a", a},
                     {"method", o.method}, {"tol", tol}};
    report.results = {
        {"row_count", static_cast<std::int64_t>(rows.size())},
        {"all_margins_positive", all_positive},
        {"scaled_strictly_increasing", increasing},
        {"scaled_in_open_1_2", bounded},
    };
    report.table = std::move(table);
    report.pass = all_positive;
    return report;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions
{
    int n = 2;
    std::uint64_t pairs = 1000000;
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 0;
    std::optional<double> epsilon;
    std::optional<double> a;
};

void print_violation(const ViolatingPair& v, std::ostream& err)
{
    std::ostringstream line;
    line.precision(std::numeric_limits<double>::max_digits10);
    auto point = [&](const Point& p) {
        line << "(";
        for (std::size_t i = 0; i < p.size(); ++i) line << (i ? ", " : "") << p[i];
        line << ")";
    };
    line << "violating pair [" << to_string(v.classification.tag) << ", distance " << v.classification.distance
         << "]: x = ";
    point(v.x);
    line << " y = ";
    point(v.y);
    err << line.str() << "\n";
}

Report cmd_verify(const VerifyOptions& o, std::ostream& err)
{
    const double a = o.a.value_or(canonical_offset());
    const ConstructionParams params(o.n, a);

    const AuditReport audit = o.epsilon ? pair_audit({o.seed, o.pairs, params}, *o.epsilon)
                                        : pair_audit({o.seed, o.pairs, params});
    // Monte Carlo runs on its own derived stream so it does not replay the audit's draws.
    const McRatio mc = mc_volume_ratio({shard_seed(o.seed, 1), o.samples, params});
    const double analytic = ratio_S(params, VolumeMethod::closed_form).ratio;
    const double sigma = std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(mc.samples));
    const double z = sigma > 0.0 ? (mc.ratio - analytic) / sigma : 0.0;
    const bool within = std::fabs(mc.ratio - analytic) <= 3.0 * sigma;

    if (audit.first_violation) print_violation(*audit.first_violation, err);

    Report report;
    report.command = "verify";
    report.inputs = {{"n", std::int64_t{o.n}}, {"a", a}, {"pairs", i64(o.pairs)}, {"samples", i64(o.samples)},
                     {"seed", i64(o.seed)}, {"epsilon", opt_cell(o.epsilon)}};
    report.results = {
        {"pairs_tested", i64(audit.pairs_tested)},
        {"same_pairs", i64(audit.same_pairs)},
        {"cross_pairs", i64(audit.cross_pairs)},
        {"violations", i64(audit.violations)},
        {"membership_failures", i64(audit.membership_failures)},
        {"min_cross_distance", audit.min_cross_distance},
        {"max_same_distance", audit.max_same_distance},
        {"mc_samples", i64(mc.samples)},
        {"mc_hits", i64(mc.hits)},
        {"mc_ratio", mc.ratio},
        {"analytic_ratio", analytic},
        {"binomial_sigma", sigma},
        {"z_score", z},
        {"within_3_sigma", within},
    };
    report.pass = audit.passed() && within;
    return report;
}

// ---------------------------------------------------------------- optimize-a

struct OptimizeOptions
{
    int n = 2;
    double tol = 1e-12;
};

Report cmd_optimize(const OptimizeOptions& o)
{
    const double argmax = maximize_a(o.n, o.tol);
    const double canonical = canonical_offset();
    const double difference = argmax - canonical;

    Report report;
    report.command = "optimize-a";
    report.inputs = {{"n", std::int64_t{o.n}}, {"tol", o.tol}};
    report.results = {
        {"argmax", argmax},
        {"canonical", canonical},
        {"difference", difference},
        {"equidistance_residual", equidistance_residual(argmax)},
    };
    report.pass = std::fabs(difference) <= 1e-7;
    return report;
}

// ---------------------------------------------------------------- threshold

struct ThresholdOptions
{
    double c_min = 1.0;
    double c_max = 3.0;
    double resolution = 1e-3;
    std::optional<double> a;
    std::optional<double> tol;
};

Report cmd_threshold(const ThresholdOptions& o)
{
    const double a = o.a.value_or(canonical_offset());
    ConstructionParams(2, a);
    const double tol = resolve_tolerance(o.tol);
    if (!(o.c_min >= 1.0) || !(o.c_max >= o.c_min)) throw DomainError("threshold needs 1 <= c-min <= c-max");
    const CertificateSearch search = best_certificate(a, o.c_min, o.c_max, o.resolution);
    const ConcentrationCertificate& best = search.best;

    Table table;
    table.columns = {"n", "ratio", "scaled", "margin"};
    bool direct_ok = true;
    if (best.n_min > 2) {
        for (const RatioRow& r : ratio_table(2, best.n_min - 1, a, VolumeMethod::quadrature, tol)) {
            table.rows.push_back({std::int64_t{r.n}, r.ratio, r.scaled, r.margin});
            direct_ok = direct_ok && r.margin > 0.0;
        }
    }

    Report report;
    report.command = "threshold";
    report.inputs = {{"c_min", o.c_min}, {"c_max", o.c_max}, {"resolution", o.resolution}, {"a", a}, {"tol", tol}};
    report.results = {
        {"c", best.c},
        {"n_min", std::int64_t{best.n_min}},
        {"bound_factor", best.bound_factor},
        {"width_ok_from", std::int64_t{best.width_ok_from}},
        {"certifying_c_min", search.certifying_c.front()},
        {"certifying_c_max", search.certifying_c.back()},
        {"certifying_count", static_cast<std::int64_t>(search.certifying_c.size())},
        {"grid_points", std::int64_t{search.grid_points}},
        {"direct_margins_positive", direct_ok},
    };
    report.table = std::move(table);
    report.pass = best.n_min <= 15 && best.bound_factor > 1.0 && direct_ok;
    return report;
}

// ---------------------------------------------------------------- figure

struct FigureOptions
{
    std::string svg_path = "figure.svg";
    double scale = 256.0;
    std::optional<double> epsilon;
    std::optional<double> a;
};

std::string junction_path(const std::string& svg_path)
{
    std::filesystem::path path(svg_path);
    path.replace_extension(".junctions.csv");
    return path.string();
}

Report cmd_figure(const FigureOptions& o)
{
    const double a = o.a.value_or(canonical_offset());
    const figure::FigureSpec spec = figure::build_figure(a, o.scale, o.epsilon.value_or(0.0));
    const std::string csv_path = junction_path(o.svg_path);
    write_file(o.svg_path, figure::render_svg(spec));
    write_file(csv_path, figure::junction_csv(spec));

    const double identity_gap = std::fabs(spec.threshold_half_width - spec.chord_half_width);
    const double endpoint_gap = figure::max_endpoint_gap(spec);

    Report report;
    report.command = "figure";
    report.inputs = {{"out", o.svg_path}, {"scale", o.scale}, {"epsilon", opt_cell(o.epsilon)}, {"a", a}};
    report.results = {
        {"svg", o.svg_path},
        {"junctions", csv_path},
        {"junction_count", static_cast<std::int64_t>(spec.junctions.size())},
        {"chord", spec.chord},
        {"threshold_half_width", spec.threshold_half_width},
        {"chord_half_width", spec.chord_half_width},
        {"identity_gap", identity_gap},
        {"max_endpoint_gap", endpoint_gap},
    };
    report.pass = identity_gap <= 1e-9 && endpoint_gap <= 1e-9;
    return report;
}

// ---------------------------------------------------------------- concentration-check

struct ConcentrationOptions
{
    int n_max = 50;
    std::vector<double> c_list = {1.0, 1.5, 2.0, 3.0};
};

Report cmd_concentration(const ConcentrationOptions& o)
{
    if (o.n_max < 3) throw DomainError("n-max must be at least 3");
    if (o.c_list.empty()) throw DomainError("c-list must not be empty");
    for (double c : o.c_list) {
        if (!(c >= 1.0) || !std::isfinite(c)) throw DomainError("every c must be finite and at least 1");
    }

    Table table;
    table.columns = {"n", "c", "half_width", "exact", "bound", "slack", "status"};
    bool all_ok = true;
    std::int64_t checked = 0;
    std::int64_t skipped = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    for (int n = 3; n <= o.n_max; ++n) {
        for (double c : o.c_list) {
            const double half_width = c / std::sqrt(static_cast<double>(n - 1));
            if (half_width > 1.0) {
                table.rows.push_back({std::int64_t{n}, c, half_width, std::monostate{}, std::monostate{},
                                      std::monostate{}, std::string("width > 1")});
                ++skipped;
                continue;
            }
            const TheoremCheck check = check_theorem(n, c);
            table.rows.push_back({std::int64_t{n}, c, half_width, check.exact, check.bound, check.slack(),
                                  std::string(check.holds() ? "ok" : "violated")});
            all_ok = all_ok && check.holds();
            min_slack = std::fmin(min_slack, check.slack());
            ++checked;
        }
    }

    std::string c_text;
    for (std::size_t i = 0; i < o.c_list.size(); ++i) c_text += (i ? "," : "") + format_roundtrip(o.c_list[i]);

    Report report;
    report.command = "concentration-check";
    report.inputs = {{"n_max", std::int64_t{o.n_max}}, {"c_list", c_text}};
    report.results = {
        {"checked", checked},
        {"skipped", skipped},
        {"min_slack", checked > 0 ? Cell(min_slack) : Cell(std::monostate{})},
        {"all_slacks_nonnegative", all_ok},
    };
    report.table = std::move(table);
    report.pass = all_ok;
    return report;
}

// ---------------------------------------------------------------- dispatch

int exit_code(const Report& report)
{
    return report.pass ? kExitPass : kExitCheckFailed;
}

// Runs one command body, mapping library exceptions to exit codes.
int guarded(const std::string& name, std::ostream& err, const std::function<int()>& body)
{
    try {
        return body();
    } catch (const NoCertificateError& e) {
        err << name << ": " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const NumericError& e) {
        err << name << ": " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const CertificateError& e) {
        err << name << ": " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const IoError& e) {
        err << name << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << name << ": invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << name << ": " << e.what() << "\n";
        return kExitUsage;
    }
}

void add_output(CLI::App* sub, Output& output, bool with_path = true)
{
    sub->add_option("--format", output.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    if (with_path) sub->add_option("--out", output.path, "Write the report to PATH instead of standard output");
}

void add_offset(CLI::App* sub, std::optional<double>& a)
{
    sub->add_option("--a", a, "Ball offset a in (1/2, 1); defaults to (1 + sqrt 10)/6");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Volume and distance checks for a large set in the unit ball avoiding distance 1", "davoid"};
    app.require_subcommand(1);
    app.fallthrough(false);

    const std::string tol_help =
        std::string("Relative quadrature tolerance in [1e-14, 1e-6]; default from ") + kToleranceEnv + " or 1e-12";

    Output output;
    RatioOptions ratio;
    CLI::App* ratio_cmd = app.add_subcommand("ratio", "Volume ratio vol S_n / vol B_n and its margin over 2^-n");
    ratio_cmd->add_option("--n", ratio.n, "Dimension")->check(CLI::Range(2, 10000))->capture_default_str();
    add_offset(ratio_cmd, ratio.a);
    ratio_cmd->add_option("--method", ratio.method, "Volume method")
        ->check(CLI::IsMember({"quadrature", "closed-form", "lower-bound"}))
        ->capture_default_str();
    ratio_cmd->add_option("--tol", ratio.tol, tol_help);
    add_output(ratio_cmd, output);

    TableOptions table;
    CLI::App* table_cmd = app.add_subcommand("table", "Ratio table over a range of dimensions");
    table_cmd->add_option("--min-n", table.min_n, "First dimension")->check(CLI::Range(2, 10000))->capture_default_str();
    table_cmd->add_option("--max-n", table.max_n, "Last dimension")->check(CLI::Range(2, 10000))->capture_default_str();
    add_offset(table_cmd, table.a);
    table_cmd->add_option("--method", table.method, "Volume method")
        ->check(CLI::IsMember({"quadrature", "closed-form", "lower-bound"}))
        ->capture_default_str();
    table_cmd->add_option("--tol", table.tol, tol_help);
    add_output(table_cmd, output);

    VerifyOptions verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Sampled distance audit and Monte Carlo volume check");
    verify_cmd->add_option("--n", verify.n, "Dimension")->check(CLI::Range(2, 10000))->capture_default_str();
    verify_cmd->add_option("--pairs", verify.pairs, "Pairs to audit")
        ->check(CLI::Range(std::uint64_t{10000}, std::uint64_t{1} << 40))
        ->capture_default_str();
    verify_cmd->add_option("--samples", verify.samples, "Monte Carlo samples")
        ->check(CLI::Range(std::uint64_t{10000}, std::uint64_t{1} << 40))
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "Random seed")->capture_default_str();
    verify_cmd->add_option("--epsilon", verify.epsilon, "Audit the closed inner approximation with this epsilon");
    add_offset(verify_cmd, verify.a);
    add_output(verify_cmd, output);

    OptimizeOptions optimize;
    CLI::App* optimize_cmd = app.add_subcommand("optimize-a", "Numerically maximise vol T_n over the offset a");
    optimize_cmd->add_option("--n", optimize.n, "Dimension")->check(CLI::Range(2, 10000))->capture_default_str();
    optimize_cmd->add_option("--tol", optimize.tol, "Bracket width at termination (>= 1e-12)")
        ->check(CLI::Range(1e-12, 1e-2))
        ->capture_default_str();
    add_output(optimize_cmd, output);

    ThresholdOptions threshold;
    CLI::App* threshold_cmd =
        app.add_subcommand("threshold", "Concentration certificate and direct checks below its threshold");
    threshold_cmd->add_option("--c-min", threshold.c_min, "Smallest c on the grid")->capture_default_str();
    threshold_cmd->add_option("--c-max", threshold.c_max, "Largest c on the grid")->capture_default_str();
    threshold_cmd->add_option("--resolution", threshold.resolution, "Grid step in (0, 1e-3]")->capture_default_str();
    add_offset(threshold_cmd, threshold.a);
    threshold_cmd->add_option("--tol", threshold.tol, tol_help);
    add_output(threshold_cmd, output);

    FigureOptions fig;
    CLI::App* figure_cmd = app.add_subcommand("figure", "Write an SVG drawing of S_2 and a CSV of its junction points");
    figure_cmd->add_option("--out", fig.svg_path, "SVG path; junctions go next to it as *.junctions.csv")
        ->capture_default_str();
    figure_cmd->add_option("--scale", fig.scale, "Pixels per unit")->check(CLI::PositiveNumber)->capture_default_str();
    figure_cmd->add_option("--epsilon", fig.epsilon, "Also outline the closed inner approximation");
    add_offset(figure_cmd, fig.a);
    add_output(figure_cmd, output, false);

    ConcentrationOptions concentration;
    CLI::App* concentration_cmd = app.add_subcommand(
        "concentration-check", "Compare exact central slab fractions of B_n with 1 - (2/c) exp(-c^2/2)");
    concentration_cmd->add_option("--n-max", concentration.n_max, "Largest dimension")
        ->check(CLI::Range(3, 10000))
        ->capture_default_str();
    concentration_cmd->add_option("--c-list", concentration.c_list, "Comma-separated constants c >= 1")
        ->delimiter(',')
        ->capture_default_str();
    add_output(concentration_cmd, output);

    std::string figure_out = "figure.svg";
    CLI::App* all_cmd = app.add_subcommand("check-all", "Run every check with its defaults");
    all_cmd->add_option("--figure-out", figure_out, "SVG path for the figure step")->capture_default_str();
    add_output(all_cmd, output);

    std::vector<const char*> argv{"davoid"};
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n";
        const CLI::App* failing = &app;
        for (const CLI::App* sub : app.get_subcommands()) failing = sub;
        err << failing->help();
        return kExitUsage;
    }

    auto run_one = [&](const std::string& name, const std::function<Report()>& make) {
        return guarded(name, err, [&] {
            const Report report = make();
            emit(report, output, out);
            return exit_code(report);
        });
    };

    if (ratio_cmd->parsed()) return run_one("ratio", [&] { return cmd_ratio(ratio); });
    if (table_cmd->parsed()) return run_one("table", [&] { return cmd_table(table); });
    if (verify_cmd->parsed()) return run_one("verify", [&] { return cmd_verify(verify, err); });
    if (optimize_cmd->parsed()) return run_one("optimize-a", [&] { return cmd_optimize(optimize); });
    if (threshold_cmd->parsed()) return run_one("threshold", [&] { return cmd_threshold(threshold); });
    if (figure_cmd->parsed()) return run_one("figure", [&] { return cmd_figure(fig); });
    if (concentration_cmd->parsed()) {
        return run_one("concentration-check", [&] { return cmd_concentration(concentration); });
    }

    // check-all: every command with its defaults; the worst exit code wins.
    Table summary;
    summary.columns = {"command", "exit_code", "pass"};
    int worst = kExitPass;
    auto step = [&](const std::string& name, const std::function<Report()>& make) {
        const int code = guarded(name, err, [&] { return exit_code(make()); });
        summary.rows.push_back({name, std::int64_t{code}, code == kExitPass});
        worst = std::max(worst, code);
    };
    step("ratio", [] { return cmd_ratio({}); });
    step("table", [] { return cmd_table({}); });
    step("verify", [&] { return cmd_verify({}, err); });
    step("optimize-a", [] { return cmd_optimize({}); });
    step("threshold", [] { return cmd_threshold({}); });
    step("figure", [&] {
        FigureOptions o;
        o.svg_path = figure_out;
        return cmd_figure(o);
    });
    step("concentration-check", [] { return cmd_concentration({}); });

    Report report;
    report.command = "check-all";
    report.inputs = {{"figure_out", figure_out}};
    report.results = {{"worst_exit_code", std::int64_t{worst}}};
    report.table = std::move(summary);
    report.pass = worst == kExitPass;
    const int emitted = guarded("check-all", err, [&] {
        emit(report, output, out);
        return kExitPass;
    });
    return std::max(worst, emitted);
}

}  // namespace davoid::cli
