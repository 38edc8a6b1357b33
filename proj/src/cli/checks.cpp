#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "figures.hpp"
#include "torusquake/torusquake.hpp"

namespace torusquake::cli {

namespace {

class Tracker {
public:
    Tracker(std::string name, double tol) : name_(std::move(name)), tol_(tol) {}

    void add(double err) {
        if (std::isnan(err)) err = HUGE_VAL;
        max_ = std::max(max_, err);
    }
    InvariantResult result() const { return {name_, max_, tol_, max_ < tol_}; }

private:
    std::string name_;
    double tol_;
    double max_ = 0;
};

double rel(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

double rel(const TracePoint& a, const TracePoint& b) {
    return std::max({rel(a.x, b.x), rel(a.y, b.y), rel(a.z, b.z)});
}

std::vector<TracePoint> fixtures(double perturb) {
    std::vector<TracePoint> pts = start_set(Curve::alpha);
    for (TracePoint& p : pts) p.z += perturb;
    return pts;
}

std::vector<TracePoint> random_points(int n, std::uint32_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(2.0, 20.0);
    std::vector<TracePoint> out(n);
    for (TracePoint& p : out) p = {d(rng), d(rng), d(rng)};
    return out;
}

InvariantResult fixture_level(const std::vector<TracePoint>& pts) {
    Tracker t("fixture_level", 1e-10);
    for (const TracePoint& p : pts) t.add(std::abs(kappa(p) + 2));
    return t.result();
}

std::vector<InvariantResult> suite_kappa(double perturb) {
    const auto pts = fixtures(perturb);
    Tracker tw("twist_preserves_kappa", 1e-9), kl("klein_preserves_kappa", 1e-15),
        sg("sigma_preserves_kappa", 1e-12), fl("flow_preserves_kappa", 1e-8);
    for (const TracePoint& v : random_points(1000, 7)) {
        const double k = kappa(v);
        for (Curve c : {Curve::alpha, Curve::beta, Curve::alphabeta}) {
            for (int dir : {1, -1}) tw.add(rel(kappa(twist(v, c, dir)), k));
        }
        for (KleinFlip f : {KleinFlip::xy, KleinFlip::xz, KleinFlip::yz}) kl.add(rel(kappa(klein(v, f)), k));
        for (Symmetry s : {Symmetry::rot, Symmetry::rot_inv, Symmetry::ref1, Symmetry::ref2, Symmetry::ref3}) {
            sg.add(rel(kappa(sigma(v, s)), k));
        }
    }
    for (const TracePoint& v : pts) {
        for (Curve c : {Curve::alpha, Curve::beta, Curve::alphabeta}) {
            for (int i = -50; i <= 50; ++i) {
                const TracePoint p = flow_trace(v, c, 0.1 * i);
                const double scale = std::max(1.0, p.x * p.x + p.y * p.y + p.z * p.z + std::abs(p.x * p.y * p.z));
                fl.add(std::abs(kappa(p) - kappa(v)) / scale);
            }
        }
    }
    return {fixture_level(pts), tw.result(), kl.result(), sg.result(), fl.result()};
}

std::vector<InvariantResult> suite_equivalence(double perturb) {
    const auto pts = fixtures(perturb);
    Tracker eq("lengths_match_conjugated_trace_flow", 1e-9), col("collar_equation", 1e-9);
    for (const TracePoint& v : pts) {
        const TriangleLengths w = nu(v);
        for (int i = -30; i <= 30; ++i) {
            const double r = 0.1 * i;
            const TriangleLengths a = quake_lengths_alpha(w, r);
            const TriangleLengths b = nu(flow_trace_alpha(nu_inv(w), r));
            eq.add(std::max({std::abs(a.a - b.a), std::abs(a.b - b.b), std::abs(a.c - b.c)}));
            const double ch = std::cosh(a.a) * std::cosh(a.b) * std::cosh(a.c);
            col.add(std::abs(collar_residual(a)) / ch);
        }
    }
    return {fixture_level(pts), eq.result(), col.result()};
}

std::vector<InvariantResult> suite_integer_times(double perturb) {
    const auto pts = fixtures(perturb);
    Tracker ft("flow_matches_twist", 1e-8), qd("quake_about_matches_word_twist", 1e-7);
    for (const TracePoint& v : pts) {
        for (Curve c : {Curve::alpha, Curve::beta, Curve::alphabeta}) {
            for (int n = -8; n <= 8; ++n) ft.add(rel(flow_trace(v, c, double(n)), twist_power(v, c, n)));
        }
        for (const Slope& s : {Slope(1, 1), Slope(1, 2), Slope(2, 3), Slope(1, -2), Slope(3, 5)}) {
            const Framing f = build_framing(s);
            for (int n = -3; n <= 3; ++n) qd.add(rel(quake_about(f, v, n), dehn_twist_about(s, v, n)));
        }
    }
    return {fixture_level(pts), ft.result(), qd.result()};
}

std::vector<InvariantResult> suite_fn_sign(double perturb) {
    const auto pts = fixtures(perturb);
    Tracker rt("zeta_round_trip", 1e-9), co("signed_tau_coherence", 1e-8), af("fn_alpha_flow_affine", 1e-8),
        bd("fn_beta_direct_matches_pipeline", 1e-8);
    for (const TracePoint& v : pts) {
        const FNPoint u = zeta(v);
        rt.add(rel(zeta_inv(u), v));
        for (int n = -4; n <= 4; ++n) {
            const FNPoint t = zeta(twist_power(v, Curve::alpha, n));
            co.add(std::abs(t.tau - (u.tau + n * u.ell)));
        }
        const double a = u.ell / 2;
        for (int i = -20; i <= 20; ++i) {
            const double r = 0.1 * i;
            const FNPoint t = zeta(flow_trace_alpha(v, r));
            af.add(std::max(std::abs(t.ell - u.ell), std::abs(t.tau - (u.tau + 2 * r * a))));
        }
        const double b = nu(v).b;
        for (double s : {0.5, 1.0, 2.0, -1.0}) {
            const FNPoint d = fn_quake_beta_direct(u, s);
            const FNPoint p = zeta(flow_trace(v, Curve::beta, s / (2 * b)));
            bd.add(std::max(std::abs(d.ell - p.ell), std::abs(d.tau - p.tau)));
        }
    }
    return {fixture_level(pts), rt.result(), co.result(), af.result(), bd.result()};
}

std::vector<InvariantResult> suite_simplex(double perturb) {
    const auto pts = fixtures(perturb);
    Tracker sm("simplex_sum_one", 1e-10);
    for (const TracePoint& v : pts) {
        for (const char* name : {"alpha", "beta", "alphabeta", "f1:3", "f2:2", "2/3"}) {
            const CurveSpec c = CurveSpec::parse(name);
            const double k = figure_time_scale(c);
            for (int i = -20; i <= 20; ++i) {
                const SimplexPoint sp = simplex(curve_quake(c, v, 0.1 * i * k));
                sm.add(std::abs(sp.p + sp.q + sp.r - 1));
            }
        }
    }
    return {fixture_level(pts), sm.result()};
}

std::vector<InvariantResult> suite_limits(double perturb) {
    const auto pts = fixtures(perturb);
    const FNPoint u = zeta(pts[0]);
    Tracker sl("slope_ratio_at_60", 0.05), mono("slope_ratio_monotone", 1e-12), al("alpha_ratio_shortfall_below_10", 1e-12),
        f1("family1_deviation_monotone", 1e-12), f1n("family1_deviation_n32", 0.05), pl("projective_limit", 1e-6);
    for (const Slope& s : {Slope(0, 1), Slope(1, 1), Slope(2, 3)}) {
        for (int dir : {1, -1}) {
            const auto rows = slope_limit_table(s, u, {15, 30, 60}, dir);
            const double lim = inverse_slope(s).value();
            double prev = HUGE_VAL;
            for (const SlopeRow& row : rows) {
                const double e = std::abs(row.ratio - lim);
                mono.add(e < prev ? 0.0 : e - prev);
                prev = e;
            }
            sl.add(prev);
        }
    }
    for (int dir : {1, -1}) {
        const auto rows = slope_limit_table(Slope(1, 0), u, {25 * u.ell}, dir);
        al.add(std::max(0.0, 10 - std::abs(rows.back().ratio)));
    }
    const TriangleLengths w = nu(pts[0]);
    double prev = HUGE_VAL;
    for (int n : {4, 8, 16, 32}) {
        const double d = family1_limit_deviation(w, n, 1.0);
        f1.add(d < prev ? 0.0 : d - prev);
        prev = d;
    }
    f1n.add(prev);
    for (const TracePoint& v : pts) {
        for (int dir : {1, -1}) {
            const auto lim = projective_limit(v, dir);
            const TracePoint p = flow_trace_alpha(v, 40.0 * dir);
            const double n = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
            pl.add(std::max({std::abs(p.x / n - lim[0]), std::abs(p.y / n - lim[1]), std::abs(p.z / n - lim[2])}));
        }
    }
    return {fixture_level(pts), sl.result(), mono.result(), al.result(), f1.result(), f1n.result(), pl.result()};
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(invariants.begin(), invariants.end(), [](const InvariantResult& r) { return r.passed; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"kappa", "equivalence", "integer-times", "fn-sign", "simplex",
                                                   "limits"};
    return names;
}

SuiteReport run_suite(const std::string& name, double perturb) {
    SuiteReport rep{name, {}};
    if (name == "kappa") rep.invariants = suite_kappa(perturb);
    else if (name == "equivalence") rep.invariants = suite_equivalence(perturb);
    else if (name == "integer-times") rep.invariants = suite_integer_times(perturb);
    else if (name == "fn-sign") rep.invariants = suite_fn_sign(perturb);
    else if (name == "simplex") rep.invariants = suite_simplex(perturb);
    else if (name == "limits") rep.invariants = suite_limits(perturb);
    else throw std::invalid_argument("unknown suite: " + name);
    return rep;
}

std::string report_json(const std::vector<SuiteReport>& reports) {
    nlohmann::ordered_json j;
    bool all = true;
    j["passed"] = true;
    j["suites"] = nlohmann::ordered_json::array();
    for (const SuiteReport& r : reports) {
        nlohmann::ordered_json s;
        s["suite"] = r.suite;
        s["passed"] = r.passed();
        s["invariants"] = nlohmann::ordered_json::array();
        for (const InvariantResult& inv : r.invariants) {
            nlohmann::ordered_json i;
            i["name"] = inv.name;
            i["passed"] = inv.passed;
            i["max_error"] = std::isfinite(inv.max_error) ? nlohmann::ordered_json(inv.max_error)
                                                          : nlohmann::ordered_json("inf");
            i["tolerance"] = inv.tolerance;
            s["invariants"].push_back(i);
        }
        all = all && r.passed();
        j["suites"].push_back(s);
    }
    j["passed"] = all;
    return j.dump(2);
}

}  // namespace torusquake::cli
