#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>

#include "checks.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "csv.hpp"
#include "figures.hpp"

using namespace torusquake;
using namespace torusquake::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::path(TQ_BINARY_DIR) / "scratch" / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

int call(const std::vector<std::string>& args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("doubles survive a CSV round trip") {
    const fs::path dir = scratch("csv");
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 50; ++i) rows.push_back({u(rng), std::ldexp(u(rng), -40), 1.0 / 3, -0.0});
    {
        CsvWriter w((dir / "t.csv").string(), {"a", "b", "c", "d"}, {"note one"});
        for (const auto& r : rows) w.row(r);
    }
    const CsvTable t = read_csv((dir / "t.csv").string());
    REQUIRE(t.rows.size() == rows.size());
    CHECK(t.column("c") == 2);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < 4; ++j) CHECK(t.rows[i][j] == rows[i][j]);
    }
    CHECK(slurp(dir / "t.csv").rfind("# note one\n", 0) == 0);
    CHECK_THROWS(t.column("missing"));
    CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("config files") {
    const fs::path dir = scratch("config");
    {
        std::ofstream f(dir / "ok.cfg");
        f << "# comment\nsamples = 50\nrange_min=-1\nrange_max = 3 # trailing\norient=-\n";
    }
    Settings s;
    apply_config_file(s, (dir / "ok.cfg").string());
    CHECK(s.samples == 50);
    CHECK(s.range_min == -1);
    CHECK(s.range_max == 3);
    CHECK(s.orient == -1);
    {
        std::ofstream f(dir / "bad.cfg");
        f << "colour=red\n";
    }
    CHECK_THROWS(apply_config_file(s, (dir / "bad.cfg").string()));
    CHECK_THROWS(apply_config_file(s, (dir / "absent.cfg").string()));
    CHECK_THROWS(parse_orient("sideways"));
}

TEST_CASE("start points in any chart") {
    const TracePoint a = parse_start("trace:3,3,3");
    CHECK(a.z == 3);
    const TracePoint b = parse_start("fn:" + format_double(2 * std::acosh(1.5)) + "," +
                                     format_double(2 * std::acosh(std::sqrt(5.0) / 2)));
    CHECK(b.x == doctest::Approx(3));
    CHECK(b.y == doctest::Approx(3));
    CHECK(b.z == doctest::Approx(3));
    CHECK_THROWS(parse_start("fn:1,2,3"));
}

TEST_CASE("sampled paths stay on the level set") {
    const auto path = sample_path(CurveSpec::parse("2/3"), {3, 3, 3}, -1, 1, 21, 1e-7);
    REQUIRE(path.size() == 21);
    CHECK(path.front().r == -1);
    CHECK(path.back().r == 1);
    for (const PathSample& p : path) CHECK(is_teich(p.v, 1e-7));
    CHECK_THROWS(sample_path(CurveSpec::parse("alpha"), {3, 3, 3}, 1, 1, 10, 1e-7));
}

TEST_CASE("flow command writes one CSV per chart") {
    const fs::path dir = scratch("flow");
    std::string out;
    REQUIRE(call({"flow", "--curve", "beta", "--start", "trace:3,3,3", "--chart", "trace", "fn", "--samples", "11",
                  "--out", dir.string()},
                 &out) == kOk);
    const CsvTable t = read_csv((dir / "flow_fn.csv").string());
    CHECK(t.rows.size() == 11);
    CHECK(t.header == std::vector<std::string>{"r", "s", "ell", "tau"});
    const CsvTable tr = read_csv((dir / "flow_trace.csv").string());
    for (const auto& row : tr.rows) CHECK(is_teich({row[2], row[3], row[4]}, 1e-7));
}

TEST_CASE("convert command") {
    std::string out;
    REQUIRE(call({"convert", "--point", "3,3,3", "--from", "trace", "--to", "simplex"}, &out) == kOk);
    CHECK(out.rfind("simplex_p,simplex_q,simplex_r\n", 0) == 0);
    std::string err;
    CHECK(call({"convert", "--point", "1,3,3", "--from", "trace", "--to", "fn"}, &out, &err) == kDomainError);
    CHECK(err.find("outside chart") != std::string::npos);
}

TEST_CASE("error exit codes") {
    std::string err;
    CHECK(call({"flow", "--range", "1,1", "--out", scratch("degenerate").string()}, nullptr, &err) == kDomainError);
    CHECK(call({"bogus"}, nullptr, &err) == kDomainError);
    CHECK(call({"flow", "--curve", "f2:40", "--range", "-2,2", "--samples", "3", "--out", scratch("horizon").string()},
               nullptr, &err) == kHorizonError);
    CHECK(err.find("horizon") != std::string::npos);
}

TEST_CASE("check suites pass and the negative control fails") {
    for (const std::string& name : suite_names()) {
        const SuiteReport r = run_suite(name);
        CHECK_MESSAGE(r.passed(), name);
    }
    CHECK_FALSE(run_suite("kappa", 1e-3).passed());
    std::string out;
    CHECK(call({"check", "--suite", "simplex"}, &out) == kOk);
    CHECK(out.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("figure output is deterministic") {
    const fs::path a = scratch("fig_a"), b = scratch("fig_b");
    REQUIRE(call({"figure", "--id", "fig15", "--samples", "41", "--out", a.string()}) == kOk);
    REQUIRE(call({"figure", "--id", "fig15", "--samples", "41", "--out", b.string()}) == kOk);
    int files = 0;
    for (const auto& e : fs::directory_iterator(a)) {
        CHECK(slurp(e.path()) == slurp(b / e.path().filename()));
        ++files;
    }
    CHECK(files > 0);
    CHECK(figure_ids().size() == 13);
}

TEST_CASE("slope table and probe commands") {
    std::string out;
    REQUIRE(call({"slope-table", "--curve", "2/3", "--start", "trace:3,3,3", "--direction", "forward"}, &out) == kOk);
    CHECK(out.find("s,ell,tau,ratio") != std::string::npos);
    CHECK(call({"slope-table", "--curve", "2/3", "--direction", "sideways"}) == kDomainError);
    REQUIRE(call({"intersect-probe", "--backward", "alpha", "--forward", "beta", "--start", "trace:3,3,3",
                  "--s-max", "6"},
                 &out) == kOk);
    CHECK(out.find("\"found\": true") != std::string::npos);
}
