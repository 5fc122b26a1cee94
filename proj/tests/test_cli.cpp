// Drives the installed command-line binary end to end via std::system.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "phirho/io.hpp"

using namespace phirho;

namespace {

const std::string kCli = PHIRHO_CLI_PATH;
const std::string kData = PHIRHO_DATA_DIR;

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(const std::string& args) {
    const std::string out_path = "cli_stdout.tmp";
    const std::string err_path = "cli_stderr.tmp";
    const std::string cmd = kCli + " " + args + " > " + out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_file(out_path);
    r.err = read_file(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("measures: exact statistics for the 8-strip instance") {
    const RunResult r = run("measures --in " + kData + "/eight_strips.json");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "phi = -5/16 = -0.3125"));
    CHECK(contains(r.out, "rho = -13/32 = -0.40625"));
}

TEST_CASE("measures: families by flag") {
    const RunResult alpha = run("measures --alpha 1/2");
    CHECK(alpha.code == 0);
    CHECK(contains(alpha.out, "phi = -1/2"));
    CHECK(contains(alpha.out, "rho = -1/1"));

    const RunResult interp = run("measures --N 2");
    CHECK(interp.code == 0);
    CHECK(contains(interp.out, "rho = 151/216"));

    const RunResult rising = run("measures --a 1/3");
    CHECK(rising.code == 0);
    CHECK(contains(rising.out, "rho = -11/54"));

    const RunResult plateau = run("measures --b 1/8 --grid 128");
    CHECK(plateau.code == 0);
    CHECK(contains(plateau.out, "phi = 5/32"));
    CHECK(contains(plateau.out, "rho = 33/64"));
    CHECK(contains(plateau.out, "error bound = 3/128"));
}

TEST_CASE("measures: grid oracle mode on the identity") {
    const RunResult r = run("measures --in " + kData + "/identity4.json --grid 64");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "phi = 1/1 = 1"));
    CHECK(contains(r.out, "rho = 1/1 = 1"));
    CHECK(contains(r.out, "error bound = 3/64"));
    CHECK(contains(r.out, "error bound = 3/8"));  // 24/64 reduced
}

TEST_CASE("measures: rejects ambiguous or broken input") {
    CHECK(run("measures --alpha 1/2 --b 1/8").code == 2);
    CHECK(run("measures --in does_not_exist.json").code == 2);
    const RunResult r = run("measures --in " + kData + "/eight_strips.json --grid 4");
    CHECK(r.code != 0);  // grid resolution below the floor
}

TEST_CASE("enumerate: exact table for two strips") {
    const RunResult r = run("enumerate --n 2");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "label,phi,rho,phi_float,rho_float,upper_eq,lower_eq\n"
          "1-2,1/1,1/1,1,1,1,1\n"
          "2-1,-1/2,-1/2,-0.5,-0.5,1,0\n");
}

TEST_CASE("enumerate: row counts and CSV round trip") {
    const std::string out_path = "cli_n6.csv";
    const RunResult r = run("enumerate --n 6 --out " + out_path);
    CHECK(r.code == 0);
    const std::string text = read_file(out_path);
    const std::vector<PointRow> rows = parse_points_csv(text);
    CHECK(rows.size() == 76);
    CHECK(points_csv(rows) == text);  // byte-identical after a round trip
    int on_upper = 0;
    for (const PointRow& row : rows) on_upper += row.upper_equality ? 1 : 0;
    CHECK(on_upper == 3);
    std::remove(out_path.c_str());

    CHECK(run("enumerate --n 11").code != 0);  // above the ceiling
    CHECK(run("enumerate --n 1").code != 0);
}

TEST_CASE("verify: suites pass and report per-check lines") {
    const RunResult r = run("verify --suite bounds --n-max 6");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "PASS\tbounds/involution-bounds"));
    CHECK(contains(r.out, "PASS\tbounds/upper-equality-set"));
    CHECK(contains(r.out, "4 checks, 0 failures"));

    const RunResult unknown = run("verify --suite nonsense");
    CHECK(unknown.code == 2);
    CHECK(contains(unknown.err, "unknown suite"));
}

TEST_CASE("boundary: pinned samples") {
    const RunResult r = run("boundary --curve upper --samples 3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "upper,-0.5,-0.5\nupper,0.25,0.625\nupper,1,1\n"));

    const RunResult s = run("boundary --curve s --samples 10");
    CHECK(s.code == 0);
    CHECK(contains(s.out, "s,0.33333333333333331,0.69907407407407407"));  // 151/216

    const RunResult quarter = run("boundary --curve r --samples 7");
    CHECK(quarter.code == 0);
    CHECK(contains(quarter.out, "r,0.25,0.625"));

    CHECK(run("boundary --curve diagonal").code != 0);
}

TEST_CASE("boundary: CSV round trip") {
    const std::string out_path = "cli_lower.csv";
    CHECK(run("boundary --curve lower --samples 33 --out " + out_path).code == 0);
    const std::string text = read_file(out_path);
    const std::vector<CurveRow> rows = parse_curves_csv(text);
    CHECK(rows.size() == 33);
    CHECK(curves_csv(rows) == text);
    CHECK(rows.front().y == -1.0);  // radicand vanishes, float path is exact
    CHECK(std::abs(rows.back().y - 1.0) < 1e-12);  // power branch, last-bit wobble
    std::remove(out_path.c_str());
}

TEST_CASE("render: SVG with scatter and polylines") {
    const std::string points_path = "cli_points.csv";
    const std::string curves_path = "cli_curves.csv";
    const std::string svg_path = "cli_region.svg";
    CHECK(run("enumerate --n 4 --out " + points_path).code == 0);
    CHECK(run("boundary --curve upper --samples 61 --out " + curves_path).code == 0);
    const RunResult r =
        run("render --in " + points_path + " --in " + curves_path + " --out " + svg_path);
    CHECK(r.code == 0);
    const std::string svg = read_file(svg_path);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(contains(svg, "<polyline"));
    CHECK(contains(svg, "<circle"));
    CHECK(contains(svg, ">phi</text>"));
    CHECK(contains(svg, "xmlns"));
    CHECK(!contains(svg, "<script"));  // self-contained, no active content
    std::remove(points_path.c_str());
    std::remove(curves_path.c_str());
    std::remove(svg_path.c_str());
}

TEST_CASE("rearrange: JSON report for the worked instance") {
    const RunResult r = run("rearrange --in " + kData + "/eight_strips.json");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"-53/64\""));
    CHECK(contains(r.out, "nested-block"));
    CHECK(contains(r.out, "\"m_sign\": 1"));

    // a non-involution permutation is rejected before the pipeline runs
    const std::string bad = "cli_cycle.json";
    write_file(bad, "{\"n\": 3, \"pi\": [2, 3, 1]}\n");
    const RunResult cyc = run("rearrange --in " + bad);
    CHECK(cyc.code == 2);
    CHECK(contains(cyc.err, "involution"));
    std::remove(bad.c_str());
}

TEST_CASE("measures: slope-pattern input goes through the shuffle route") {
    const RunResult r = run("measures --in " + kData + "/pattern12.json");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "phi = 1/2"));
    CHECK(contains(r.out, "rho = 59/72"));
}
