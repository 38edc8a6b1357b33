#include "commands.hpp"

#include <filesystem>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "checks.hpp"
#include "config.hpp"
#include "csv.hpp"
#include "figures.hpp"

namespace torusquake::cli {

namespace {

std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        if (used != cell.size()) throw std::invalid_argument("bad number: " + cell);
        out.push_back(v);
    }
    return out;
}

// Applies the config file, then any flag given on the command line.
struct SettingFlags {
    std::string config;
    int samples = 0;
    std::vector<double> range;
    std::string param;
    std::string orient;
    double tol_level = 0;
    double s_max = 0;
    int steps = 0;
};

Settings resolve(const CLI::App& cmd, const SettingFlags& f) {
    Settings s;
    if (!f.config.empty()) apply_config_file(s, f.config);
    auto given = [&](const char* name) {
        const CLI::Option* o = cmd.get_option_no_throw(name);
        return o && o->count() > 0;
    };
    if (given("--samples")) s.samples = f.samples;
    if (given("--range")) s.range_min = f.range.at(0), s.range_max = f.range.at(1);
    if (given("--param")) s.param = f.param;
    if (given("--orient")) s.orient = parse_orient(f.orient);
    if (given("--tol-level")) s.tol_level = f.tol_level;
    if (given("--s-max")) s.s_max = f.s_max;
    if (given("--steps")) s.steps = f.steps;
    if (s.samples < 2) throw std::invalid_argument("sample count must be at least 2");
    if (!(s.range_max > s.range_min)) throw std::invalid_argument("parameter range must be nondegenerate");
    if (s.param != "r" && s.param != "s") throw std::invalid_argument("param must be r or s");
    return s;
}

void add_setting_flags(CLI::App* cmd, SettingFlags& f) {
    cmd->add_option("--config", f.config, "key=value settings file");
    cmd->add_option("--samples", f.samples, "samples per path (default 400)");
    cmd->add_option("--range", f.range, "parameter range: min max (default -2 2)")->expected(2)->delimiter(',');
    cmd->add_option("--param", f.param, "r (unit twists) or s (arclength)");
    cmd->add_option("--orient", f.orient, "+ or -: sign convention for the FN twist");
    cmd->add_option("--tol-level", f.tol_level, "level-set tolerance for emitted samples (default 1e-7)");
}

int cmd_flow(const std::string& curve, const std::string& start, const std::vector<std::string>& chart_names,
             const std::string& out_dir, const Settings& st, std::ostream& out) {
    const CurveSpec c = CurveSpec::parse(curve);
    const int orient = st.orient.value_or(1);
    const TracePoint v = parse_start(start, orient);
    double lo = st.range_min, hi = st.range_max;
    if (st.param == "s") {
        const double ell = curve_length(c, v);
        lo /= ell, hi /= ell;
    }
    const std::vector<PathSample> path = sample_path(c, v, lo, hi, st.samples, st.tol_level);
    std::filesystem::create_directories(out_dir);
    for (const std::string& name : chart_names) {
        const Chart chart = parse_chart(name);
        std::vector<std::string> header = {"r", "s"};
        for (const std::string& col : chart_columns(chart)) header.push_back(col);
        const std::string file = out_dir + "/flow_" + std::string(chart_name(chart)) + ".csv";
        CsvWriter csv(file, header, {"curve=" + c.label() + " slope=" + c.slope.str()});
        for (std::size_t i = 0; i < path.size(); ++i) {
            std::vector<double> row = {path[i].r, path[i].s};
            try {
                for (double k : to_chart(path[i].v, chart, orient)) row.push_back(k);
            } catch (const DomainError& e) {
                throw DomainError("sample " + std::to_string(i) + " (r=" + format_double(path[i].r) + ") in chart " +
                                  name + ": " + e.what());
            }
            csv.row(row);
        }
        out << file << '\n';
    }
    return kOk;
}

int cmd_convert(const std::string& point, const std::string& from, const std::string& to, int orient,
                std::ostream& out) {
    const Chart src = parse_chart(from), dst = parse_chart(to);
    const TracePoint v = from_chart(parse_numbers(point), src, orient);
    const std::vector<std::string> cols = chart_columns(dst);
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n' << join_values(to_chart(v, dst, orient)) << '\n';
    return kOk;
}

int cmd_slope_table(const std::string& curve, const std::string& start, const std::string& direction,
                    const std::string& out_file, const Settings& st, std::ostream& out) {
    const Slope s = CurveSpec::parse(curve).slope;
    int dir = 0;
    if (direction == "forward") dir = 1;
    else if (direction == "backward") dir = -1;
    else throw std::invalid_argument("direction must be forward or backward");
    if (st.steps < 1 || !(st.s_max > 0)) throw std::invalid_argument("s_max and steps must be positive");
    const FNPoint u = zeta(parse_start(start, 1));
    std::vector<double> grid;
    for (int i = 1; i <= st.steps; ++i) grid.push_back(st.s_max * i / st.steps);
    const auto rows = slope_limit_table(s, u, grid, dir);

    std::ostringstream body;
    body << "# curve=" << s.str() << " direction=" << direction << " limit=" << inverse_slope(s).str() << '\n';
    body << "s,ell,tau,ratio\n";
    for (const SlopeRow& r : rows) body << join_values({r.s, r.ell, r.tau, r.ratio}) << '\n';
    if (out_file.empty()) {
        out << body.str();
    } else {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + out_file);
        f << body.str();
        out << out_file << '\n';
    }
    return kOk;
}

int cmd_probe(const std::string& backward, const std::string& forward, const std::string& start, double s_max,
              std::ostream& out) {
    const Slope s1 = CurveSpec::parse(backward).slope, s2 = CurveSpec::parse(forward).slope;
    const FNPoint u = zeta(parse_start(start, 1));
    const ProbeResult r = quake_intersection_probe(s1, s2, u, s_max);
    nlohmann::ordered_json j;
    j["backward"] = s1.str();
    j["forward"] = s2.str();
    j["s_max"] = s_max;
    j["found"] = r.found;
    j["message"] = r.message;
    if (r.found) {
        j["s_star"] = r.s_star;
        j["residual"] = r.residual;
    }
    out << j.dump(2) << '\n';
    return kOk;
}

}  // namespace

TracePoint parse_start(const std::string& text, int orient) {
    const auto colon = text.find(':');
    const std::string chart = colon == std::string::npos ? "trace" : text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? text : text.substr(colon + 1);
    return from_chart(parse_numbers(rest), parse_chart(chart), orient);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Earthquake paths on the Teichmuller space of the once-punctured torus", "torusquake"};
    app.require_subcommand(1);

    SettingFlags flow_flags;
    std::string flow_curve = "alpha", flow_start = "trace:3,3,3", flow_out = ".";
    std::vector<std::string> flow_charts = {"trace"};
    auto* flow = app.add_subcommand("flow", "sample an earthquake path");
    flow->add_option("--curve", flow_curve, "p/q, alpha, beta, alphabeta, f1:n, f2:n or f2d:n");
    flow->add_option("--start", flow_start, "chart:c1,c2[,c3]");
    flow->add_option("--chart", flow_charts, "charts to emit");
    flow->add_option("--out", flow_out, "output directory");
    add_setting_flags(flow, flow_flags);

    std::string conv_point, conv_from = "trace", conv_to = "trace", conv_orient = "+";
    auto* convert = app.add_subcommand("convert", "convert a point between charts");
    convert->add_option("--point", conv_point, "comma-separated coordinates")->required();
    convert->add_option("--from", conv_from, "source chart");
    convert->add_option("--to", conv_to, "target chart");
    convert->add_option("--orient", conv_orient, "+ or -");

    std::string suite = "all";
    double perturb = 0;
    auto* check = app.add_subcommand("check", "run invariant suites and print a JSON report");
    check->add_option("--suite", suite, "kappa, equivalence, integer-times, fn-sign, simplex, limits or all");
    check->add_option("--perturb", perturb, "shift fixture z-coordinates (negative control)");

    SettingFlags fig_flags;
    std::string fig_id, fig_out = ".";
    auto* figure = app.add_subcommand("figure", "emit figure data");
    figure->add_option("--id", fig_id, "fig2 ... fig17, or all")->required();
    figure->add_option("--out", fig_out, "output directory");
    add_setting_flags(figure, fig_flags);

    SettingFlags tab_flags;
    std::string tab_curve = "beta", tab_start = "trace:3,3,3", tab_dir = "forward", tab_out;
    auto* table = app.add_subcommand("slope-table", "tabulate tau/ell along an earthquake");
    table->add_option("--curve", tab_curve, "p/q or a framing curve name");
    table->add_option("--start", tab_start, "chart:c1,c2[,c3]");
    table->add_option("--direction", tab_dir, "forward or backward");
    table->add_option("--out", tab_out, "output CSV (default stdout)");
    table->add_option("--s-max", tab_flags.s_max, "largest arclength (default 60)");
    table->add_option("--steps", tab_flags.steps, "number of rows (default 4)");
    table->add_option("--config", tab_flags.config, "key=value settings file");

    std::string pr_back = "alpha", pr_fwd = "beta", pr_start = "trace:3,3,3";
    double pr_smax = 10;
    auto* probe = app.add_subcommand("intersect-probe", "search for a meeting point of two earthquake paths");
    probe->add_option("--backward", pr_back, "curve followed backwards");
    probe->add_option("--forward", pr_fwd, "curve followed forwards");
    probe->add_option("--start", pr_start, "chart:c1,c2[,c3]");
    probe->add_option("--s-max", pr_smax, "largest arclength searched");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }

    try {
        if (*flow) {
            return cmd_flow(flow_curve, flow_start, flow_charts, flow_out, resolve(*flow, flow_flags), out);
        }
        if (*convert) {
            return cmd_convert(conv_point, conv_from, conv_to, parse_orient(conv_orient), out);
        }
        if (*check) {
            std::vector<SuiteReport> reports;
            if (suite == "all") {
                for (const std::string& name : suite_names()) reports.push_back(run_suite(name, perturb));
            } else {
                reports.push_back(run_suite(suite, perturb));
            }
            out << report_json(reports) << '\n';
            for (const SuiteReport& r : reports) {
                if (!r.passed()) return kDomainError;
            }
            return kOk;
        }
        if (*figure) {
            const Settings st = resolve(*figure, fig_flags);
            const std::vector<std::string> ids = fig_id == "all" ? figure_ids() : std::vector<std::string>{fig_id};
            for (const std::string& id : ids) {
                for (const std::string& file : run_figure(id, fig_out, st)) out << file << '\n';
            }
            return kOk;
        }
        if (*table) {
            return cmd_slope_table(tab_curve, tab_start, tab_dir, tab_out, resolve(*table, tab_flags), out);
        }
        if (*probe) {
            return cmd_probe(pr_back, pr_fwd, pr_start, pr_smax, out);
        }
    } catch (const NumericHorizonError& e) {
        err << "error: " << e.what() << " (magnitude " << e.magnitude() << ")\n";
        return kHorizonError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kOk;
}

}  // namespace torusquake::cli
