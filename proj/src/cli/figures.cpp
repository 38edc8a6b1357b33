#include "figures.hpp"

#include <cmath>
#include <filesystem>
#include <map>

#include "csv.hpp"
#include "svg.hpp"

namespace torusquake::cli {

namespace {

const std::vector<std::string> kCurveSet = {"alpha", "beta", "alphabeta", "f1:2", "f1:3",
                                            "f1:4",  "f2:2", "f2:3",      "f2:4"};

std::vector<FigureJob> framing_jobs(const Settings& st) {
    std::vector<FigureJob> jobs;
    for (Curve c : {Curve::alpha, Curve::beta, Curve::alphabeta}) {
        const std::vector<TracePoint> starts = start_set(c);
        for (std::size_t i = 0; i < starts.size(); ++i) {
            jobs.push_back({CurveSpec::parse(std::string(curve_name(c))), static_cast<int>(i), starts[i],
                            st.range_min, st.range_max});
        }
    }
    return jobs;
}

std::vector<FigureJob> jobs_for(const std::vector<std::string>& curves, const std::vector<TracePoint>& starts,
                                double r_min, double r_max) {
    std::vector<FigureJob> jobs;
    for (const std::string& name : curves) {
        const CurveSpec c = CurveSpec::parse(name);
        const double k = figure_time_scale(c);
        for (std::size_t i = 0; i < starts.size(); ++i) {
            jobs.push_back({c, static_cast<int>(i), starts[i], r_min * k, r_max * k});
        }
    }
    return jobs;
}

std::vector<std::string> column_names(const FigureSpec& f, const std::optional<int>& orient) {
    std::vector<std::string> cols = {"r", "s", "x", "y", "z"};
    for (Chart c : f.charts) {
        if (c == Chart::trace) continue;
        for (const std::string& name : chart_columns(c)) {
            if (c == Chart::fn && name == "tau" && !orient) {
                cols.push_back("tau_plus");
                cols.push_back("tau_minus");
            } else {
                cols.push_back(name);
            }
        }
    }
    return cols;
}

std::string sample_label(const PathSample& p) {
    return "r=" + format_double(p.r);
}

// Absolute level tolerance is meaningful while traces stay near 10^2; past that,
// rounding in κ grows with the monomials, so compare against their scale instead.
bool on_level(const TracePoint& p, double tol) {
    const double top = std::max({std::abs(p.x), std::abs(p.y), std::abs(p.z)});
    if (!(top > 100)) return is_teich(p, tol);
    const double scale = (p.x * p.x + p.y * p.y + p.z * p.z + std::abs(p.x * p.y * p.z)) / 1e6;
    return is_finite(p) && std::abs(kappa(p) + 2) < tol * scale && std::min({p.x, p.y, p.z}) > 2;
}

}  // namespace

std::vector<PathSample> sample_path(const CurveSpec& c, const TracePoint& v, double r_min, double r_max, int n,
                                    double tol_level) {
    if (n < 2) throw std::invalid_argument("sample count must be at least 2");
    if (!(r_max > r_min)) throw std::invalid_argument("parameter range must be nondegenerate");
    const bool on_teich = is_teich(v, tol_level);
    const double ell = on_teich ? curve_length(c, v) : std::nan("");
    std::vector<PathSample> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double r = i == n - 1 ? r_max : r_min + (r_max - r_min) * i / (n - 1);
        const TracePoint p = curve_quake(c, v, r);
        if (on_teich && !on_level(p, tol_level)) {
            throw DomainError("sample " + std::to_string(i) + " (r=" + format_double(r) +
                              ") left T_tr: kappa + 2 = " + format_double(kappa(p) + 2));
        }
        out.push_back({r, r * ell, p});
    }
    return out;
}

std::vector<TracePoint> start_set(Curve c) {
    const double r2 = std::sqrt(2.0);
    const std::vector<TracePoint> s_alpha = {
        {3, 3, 3}, {2 * r2, 2 * r2, 4}, {10, 10, -10 * (-5 + std::sqrt(23.0))}};
    std::vector<TracePoint> out;
    for (const TracePoint& p : s_alpha) {
        switch (c) {
            case Curve::alpha: out.push_back(p); break;
            case Curve::beta: out.push_back(sigma(p, Symmetry::rot_inv)); break;
            case Curve::alphabeta: out.push_back(sigma(p, Symmetry::rot)); break;
        }
    }
    return out;
}

double figure_time_scale(const CurveSpec& c) {
    switch (c.kind) {
        case CurveSpec::Kind::slope: return 1;
        case CurveSpec::Kind::family1: return 1.0 / (c.n * c.n);
        case CurveSpec::Kind::family2:
        case CurveSpec::Kind::family2_dual: return family2_rescale(1, c.n, RescaleMode::unit_twist);
    }
    return 1;
}

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {"fig2",  "fig5",  "fig6",  "fig8",  "fig9",  "fig10", "fig11",
                                                 "fig12", "fig13", "fig14", "fig15", "fig16", "fig17"};
    return ids;
}

FigureSpec figure_spec(const std::string& id, const Settings& st) {
    const std::vector<TracePoint> s_alpha = start_set(Curve::alpha);
    const double lo = st.range_min, hi = st.range_max;
    FigureSpec f;
    f.id = id;
    if (id == "fig2" || id == "fig5" || id == "fig6") {
        f.charts = {id == "fig2" ? Chart::trace : id == "fig5" ? Chart::lengths : Chart::fn};
        f.title = "Earthquakes about alpha, beta, alphabeta";
        f.jobs = framing_jobs(st);
    } else if (id == "fig8") {
        f.charts = {Chart::trace, Chart::lengths};
        f.title = "Earthquakes about a b a^(n-1), n = 1..4";
        f.jobs = jobs_for({"f1:1", "f1:2", "f1:3", "f1:4"}, s_alpha, lo, hi);
    } else if (id == "fig9") {
        f.charts = {Chart::trace, Chart::lengths};
        f.title = "Earthquakes about T^n(alpha), n = 1..4";
        f.jobs = jobs_for({"f2:1", "f2:2", "f2:3", "f2:4"}, s_alpha, lo, hi);
    } else if (id == "fig10") {
        f.charts = {Chart::fn};
        f.title = "Earthquakes about T^n(alpha) and T^n(beta)";
        const std::vector<TracePoint> start = {zeta_inv({2 * std::acosh(1.5), 2 * std::acosh(std::sqrt(5.0) / 2)})};
        f.jobs = jobs_for({"f2:0", "f2:1", "f2:2", "f2:3", "f2d:0", "f2d:1", "f2d:2"}, start, lo, hi);
    } else if (id == "fig17") {
        f.charts = {Chart::fn};
        f.title = "Forward earthquakes from (acosh 3, 0) and (acosh 3, 1)";
        const int o = st.orient.value_or(1);
        const std::vector<TracePoint> starts = {zeta_inv({std::acosh(3.0), 0.0}), zeta_inv({std::acosh(3.0), o * 1.0})};
        f.jobs = jobs_for(kCurveSet, starts, 0.0, hi > 0 ? hi : 2.0);
    } else {
        static const std::map<std::string, std::vector<Chart>> charts = {
            {"fig11", {Chart::trace}},   {"fig12", {Chart::spherical}}, {"fig13", {Chart::inverted}},
            {"fig14", {Chart::lengths}}, {"fig15", {Chart::fn}},        {"fig16", {Chart::simplex, Chart::simplex_plane}}};
        const auto it = charts.find(id);
        if (it == charts.end()) {
            throw std::invalid_argument("unknown figure id: " + id);
        }
        f.charts = it->second;
        f.title = "Earthquakes about the curve set C";
        f.jobs = jobs_for(kCurveSet, s_alpha, lo, hi);
    }
    return f;
}

std::vector<std::string> run_figure(const std::string& id, const std::string& out_dir, const Settings& st) {
    const FigureSpec f = figure_spec(id, st);
    std::filesystem::create_directories(out_dir);
    const std::vector<std::string> cols = column_names(f, st.orient);
    std::vector<std::string> written;
    std::map<Chart, std::vector<Series>> planar;

    for (const FigureJob& job : f.jobs) {
        const std::vector<PathSample> path =
            sample_path(job.curve, job.start, job.r_min, job.r_max, st.samples, st.tol_level);
        const std::string file =
            out_dir + "/" + f.id + "_" + job.curve.label() + "_" + std::to_string(job.start_index) + ".csv";
        CsvWriter csv(file, cols,
                      {"figure=" + f.id + " curve=" + job.curve.label() + " slope=" + job.curve.slope.str() +
                       " start=" + join_values({job.start.x, job.start.y, job.start.z})});
        std::map<Chart, Series> series;
        for (const PathSample& p : path) {
            std::vector<double> row = {p.r, p.s, p.v.x, p.v.y, p.v.z};
            for (Chart c : f.charts) {
                if (c == Chart::trace) continue;
                std::vector<double> k;
                try {
                    k = to_chart(p.v, c, st.orient.value_or(1));
                } catch (const DomainError& e) {
                    throw DomainError(f.id + " " + job.curve.label() + " sample " + sample_label(p) + ": " + e.what());
                }
                if (c == Chart::fn && !st.orient) {
                    row.insert(row.end(), {k[0], k[1], -k[1]});
                } else {
                    row.insert(row.end(), k.begin(), k.end());
                }
                if (chart_is_planar(c)) {
                    series[c].label = job.curve.label();
                    series[c].points.emplace_back(k[0], k[1]);
                }
            }
            csv.row(row);
        }
        for (auto& [c, s] : series) planar[c].push_back(std::move(s));
        written.push_back(file);
    }
    for (const auto& [c, series] : planar) {
        const std::string file = out_dir + "/" + f.id + "_" + std::string(chart_name(c)) + ".svg";
        const auto names = chart_columns(c);
        write_svg(file, f.id + ": " + f.title, names[0], names[1], series);
        written.push_back(file);
    }
    return written;
}

}  // namespace torusquake::cli
