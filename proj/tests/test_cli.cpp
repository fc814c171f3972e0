#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ih/io.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_tool(const std::string& args) {
    std::string cmd = std::string(IHTOOL_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WEXITSTATUS(status);
    return r;
}

std::string fixture(const std::string& name) { return std::string(IH_FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_golden(const std::string& args, const std::string& golden_name) {
    CAPTURE(golden_name);
    RunResult r = run_tool("--format=data " + args);
    CHECK(r.code == 0);
    CHECK(r.out == read_file(std::string(IH_GOLDEN_DIR) + "/" + golden_name));
}

} // namespace

TEST_CASE("every verb matches its golden output byte for byte") {
    check_golden("validate " + fixture("susp_torus.json"), "validate_susp_torus.json");
    check_golden("betti " + fixture("susp_torus.json") + " --perversity middle --cycles",
                 "betti_susp_torus_middle.json");
    check_golden("cone " + fixture("hexagon.json") + " --apex apex", "cone_hexagon.json");
    check_golden("suspend " + fixture("torus.json"), "suspend_torus.json");
    check_golden("link " + fixture("susp_torus.json") + " --vertex north",
                 "link_susp_torus_north.json");
    check_golden("linkmap " + fixture("susp_loop.json") + " " + fixture("susp_torus.json") +
                     " --vertex north --degree 1",
                 "linkmap_susp_loop_torus.json");
    check_golden("surgery " + fixture("susp_equator.json") + " " + fixture("susp_sphere.json") +
                     " --apex north --cycle " + fixture("cycle_susp_equator.json"),
                 "surgery_susp_equator.json");
    check_golden("lift " + fixture("susp_sphere.json") + " --cycle " +
                     fixture("cycle_susp_equator.json"),
                 "lift_susp_equator.json");
    check_golden("flag " + fixture("octahedron.json") + " " + fixture("square.json") + " " +
                     fixture("point.json"),
                 "flag_octahedron.json");
    check_golden("cone-formula " + fixture("torus.json"), "cone_formula_torus.json");
    check_golden("table " + fixture("pair_point_p1.json"), "table_point_p1.json");
    check_golden("gysin " + fixture("quadric_base.json"), "gysin_quadric.json");
    check_golden("chase " + fixture("pair_curve_quadric.json") + " --degree 2",
                 "chase_curve_quadric.json");
    check_golden("hl " + fixture("hl_p2.json"), "hl_p2.json");
    check_golden("chern " + fixture("polar_p2.json"), "chern_p2.json");
}

TEST_CASE("document round trip is idempotent") {
    for (const std::string& name :
         {"torus.json", "susp_torus.json", "crossing_spheres.json", "crossing_circles.json",
          "klein.json", "octahedron.json"}) {
        CAPTURE(name);
        ih::StratifiedComplex sc = ih::parse_complex_document(ih::read_json_file(fixture(name)));
        ih::Json once = ih::emit_complex_document(sc);
        ih::StratifiedComplex again = ih::parse_complex_document(once);
        CHECK(ih::emit_complex_document(again) == once);
    }
}

TEST_CASE("relative betti through the command line") {
    // Relative IH of (cone over the torus, torus) with the cutoff-matching
    // apex value reproduces the cone identity.
    RunResult r = run_tool("--format=data betti " + fixture("cone_torus.json") + " --rel " +
                           fixture("torus.json") + " --perversity custom=3:1");
    CHECK(r.code == 0);
    ih::Json out = ih::Json::parse(r.out);
    CHECK(out["dims"] == ih::Json::array({0, 0, 2, 1}));
    // The floor middle value truncates one degree earlier.
    RunResult m = run_tool("--format=data betti " + fixture("cone_torus.json") + " --rel " +
                           fixture("torus.json") + " --perversity middle");
    ih::Json mid = ih::Json::parse(m.out);
    CHECK(mid["dims"] == ih::Json::array({0, 0, 0, 1}));
}

TEST_CASE("exit codes") {
    SUBCASE("success is zero") {
        CHECK(run_tool("validate " + fixture("sphere.json")).code == 0);
    }
    SUBCASE("parse problems exit 1") {
        CHECK(run_tool("validate " + fixture("no_such_file.json")).code == 1);
        CHECK(run_tool("betti " + fixture("sphere.json") + " --perversity bogus").code == 1);
    }
    SUBCASE("precondition violations exit 2") {
        // Ruined Hard Lefschetz input for the table.
        std::string bad = std::string(IH_FIXTURE_DIR) + "/bad_table_input.json";
        {
            ih::Json doc = ih::read_json_file(fixture("pair_point_p1.json"));
            doc["y"]["lambda"][2]["entries"] = ih::Json::array();
            std::ofstream out(bad);
            out << doc.dump(2) << "\n";
        }
        RunResult r = run_tool("table " + bad);
        CHECK(r.code == 2);
        std::remove(bad.c_str());
        CHECK(run_tool("hl " + fixture("hl_bad.json")).code == 2);
    }
    SUBCASE("nonzero link maps still exit 0") {
        CHECK(run_tool("linkmap " + fixture("susp_loop.json") + " " + fixture("susp_torus.json") +
                       " --vertex north --degree 1")
                  .code == 0);
    }
}

TEST_CASE("data output is deterministic across runs") {
    for (const std::string& args :
         {"betti " + fixture("susp_torus.json") + " --perversity middle --cycles",
          "surgery " + fixture("susp_equator.json") + " " + fixture("susp_sphere.json") +
              " --apex north --cycle " + fixture("cycle_susp_equator.json"),
          "table " + fixture("pair_two_points_p1.json")}) {
        RunResult a = run_tool("--format=data " + args);
        RunResult b = run_tool("--format=data " + args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
