#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torusquake/torusquake.hpp"

namespace py = pybind11;
using namespace torusquake;

namespace {

using Triple = std::tuple<double, double, double>;

TracePoint tp(const Triple& t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; }
Triple tup(const TracePoint& v) { return {v.x, v.y, v.z}; }
TriangleLengths tl(const Triple& t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; }
Triple tup(const TriangleLengths& w) { return {w.a, w.b, w.c}; }

}  // namespace

PYBIND11_MODULE(_torusquake, m) {
    m.doc() = "Earthquake deformations on the Teichmuller space of the once-punctured torus";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericHorizonError>(m, "NumericHorizonError", PyExc_OverflowError);

    // trace coordinates
    m.def("kappa", [](const Triple& v) { return kappa(tp(v)); });
    m.def("is_teich", [](const Triple& v, double tol) { return is_teich(tp(v), tol); },
          py::arg("v"), py::arg("tol") = kLevelTolerance);
    m.def("twist", [](const Triple& v, const std::string& c, int dir) { return tup(twist(tp(v), parse_curve(c), dir)); },
          py::arg("v"), py::arg("curve"), py::arg("dir") = 1);
    m.def("flow_trace", [](const Triple& v, const std::string& c, double r) {
        return tup(flow_trace(tp(v), parse_curve(c), r));
    });

    // words and slopes
    m.def("curve_from_slope", [](long long p, long long q) { return curve_from_slope(Slope(p, q)).str(); });
    m.def("find_dual", [](long long p, long long q) {
        const IntVec2 d = find_dual(Slope(p, q));
        return std::make_pair(d.m, d.n);
    });
    m.def("intersection", [](std::pair<long long, long long> a, std::pair<long long, long long> b) {
        return intersection(Slope(a.first, a.second), Slope(b.first, b.second));
    });
    m.def("decompose_matrix", [](long long m1, long long m2, long long n1, long long n2) {
        const Decomposition d = decompose_matrix({m1, m2, n1, n2});
        return std::make_pair(d.word.str(), d.sign);
    });
    m.def("word_trace", [](const Triple& v, const std::string& w) { return word_trace_at(tp(v), Word::parse(w)); });
    m.def("geodesic_length", &geodesic_length);

    // triangle lengths and FN
    m.def("nu", [](const Triple& v) { return tup(nu(tp(v))); });
    m.def("nu_inv", [](const Triple& w) { return tup(nu_inv(tl(w))); });
    m.def("quake_lengths_alpha", [](const Triple& w, double r) { return tup(quake_lengths_alpha(tl(w), r)); });
    m.def("collar", [](double ell) {
        const Collar c = collar(ell);
        return std::make_pair(c.d, c.epsilon);
    });
    m.def("projective_limit", [](const Triple& v, int dir) { return projective_limit(tp(v), dir); },
          py::arg("v"), py::arg("dir") = 1);
    m.def("zeta", [](const Triple& v) {
        const FNPoint u = zeta(tp(v));
        return std::make_pair(u.ell, u.tau);
    });
    m.def("zeta_inv", [](double ell, double tau) { return tup(zeta_inv({ell, tau})); });
    m.def("spherical", [](const Triple& v) {
        const Spherical s = spherical(tp(v));
        return Triple{s.theta, s.phi, s.rad};
    });
    m.def("simplex", [](const Triple& v) {
        const SimplexPoint s = simplex(tp(v));
        return Triple{s.p, s.q, s.r};
    });
    m.def("convert", [](const std::vector<double>& point, const std::string& from, const std::string& to) {
        return to_chart(from_chart(point, parse_chart(from), 1), parse_chart(to), 1);
    });

    // arbitrary curves and families
    m.def("quake_about", [](long long p, long long q, const Triple& v, double r) {
        return tup(quake_about(build_framing(Slope(p, q)), tp(v), r));
    });
    m.def("dehn_twist_about", [](long long p, long long q, const Triple& v, int n) {
        return tup(dehn_twist_about(Slope(p, q), tp(v), n));
    });
    m.def("curve_quake", [](const std::string& curve, const Triple& v, double r) {
        return tup(curve_quake(CurveSpec::parse(curve), tp(v), r));
    });
    m.def("family1_phi", [](const Triple& v, int n) { return tup(family1_phi(tp(v), n)); });
    m.def("family1_limit_deviation", [](const Triple& w, int n, double s) {
        return family1_limit_deviation(tl(w), n, s);
    });
    m.def("family2_quake", [](const Triple& v, int n, double r) { return tup(family2_quake(tp(v), n, r)); });
    m.def("family2_rescale", [](double t, int n, bool arclength) {
        return family2_rescale(t, n, arclength ? RescaleMode::arclength : RescaleMode::unit_twist);
    }, py::arg("t"), py::arg("n"), py::arg("arclength") = false);
    m.def("slope_limit_table", [](long long p, long long q, std::pair<double, double> u,
                                  const std::vector<double>& grid, int dir) {
        std::vector<std::tuple<double, double, double, double>> out;
        for (const SlopeRow& r : slope_limit_table(Slope(p, q), {u.first, u.second}, grid, dir)) {
            out.emplace_back(r.s, r.ell, r.tau, r.ratio);
        }
        return out;
    }, py::arg("p"), py::arg("q"), py::arg("u"), py::arg("grid"), py::arg("dir") = 1);
    m.def("intersection_probe", [](std::pair<long long, long long> s1, std::pair<long long, long long> s2,
                                   std::pair<double, double> u, double s_max) {
        const ProbeResult r = quake_intersection_probe(Slope(s1.first, s1.second), Slope(s2.first, s2.second),
                                                       {u.first, u.second}, s_max);
        py::dict d;
        d["found"] = r.found;
        d["s_star"] = r.s_star;
        d["residual"] = r.residual;
        d["message"] = r.message;
        return d;
    });
}
