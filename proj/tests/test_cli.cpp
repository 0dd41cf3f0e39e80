#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "test_support.hpp"

using namespace oreqs;

namespace {

struct RunResult {
    int status;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

RunResult run_cli(const std::string& args) {
    std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/oreqs_cli_out.txt";
    std::string cmd = std::string(OREQS_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    int rc = std::system(cmd.c_str());
    int status = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    return {status, slurp(out_path)};
}

std::string tmp_file(const std::string& name) {
    return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
}

std::string fixture_path(const std::string& id) {
    return std::string(OREQS_FIXTURE_DIR) + "/" + id + ".oreq";
}

}  // namespace

TEST_CASE("solve reports the rank and verifies by default") {
    auto r = run_cli("solve " + fixture_path("conjugation_4x4"));
    CHECK(r.status == 0);
    CHECK(r.out.find("rank 3") != std::string::npos);
}

TEST_CASE("solve --json emits a reloadable document usable by verify") {
    std::string json_path = tmp_file("res.json");
    auto r = run_cli("solve --json -o " + json_path + " " + fixture_path("shift_3x3"));
    REQUIRE(r.status == 0);
    auto rv = parse_result_json(slurp(json_path));
    CHECK(std::get<ResultDoc<RatFunc>>(rv).result.rank == 2);

    auto v = run_cli("verify " + json_path + " " + fixture_path("shift_3x3"));
    CHECK(v.status == 0);
    CHECK(v.out.find("all checks passed") != std::string::npos);

    SECTION("tampered result fails verification") {
        auto j = nlohmann::json::parse(slurp(json_path));
        j["rank"] = 1;
        spit(json_path, j.dump());
        auto bad = run_cli("verify " + json_path + " " + fixture_path("shift_3x3"));
        CHECK(bad.status == 1);
        CHECK(bad.out.find("FAIL") != std::string::npos);
    }
}

TEST_CASE("solve exit codes") {
    SECTION("parse error is exit 2") {
        std::string p = tmp_file("garbage.oreq");
        spit(p, "this is not a problem file\n");
        auto r = run_cli("solve " + p);
        CHECK(r.status == 2);
    }
    SECTION("missing file is exit 2") {
        CHECK(run_cli("solve /nonexistent/x.oreq").status == 2);
    }
    SECTION("non-idempotent input is exit 3 and names the entry") {
        std::string text = slurp(fixture_path("weyl_4x4"));
        auto pos = text.find("6*t^3*x^2");  // perturb one coefficient
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 9, "5*t^3*x^2");
        std::string p = tmp_file("tampered.oreq");
        spit(p, text);
        auto r = run_cli("solve " + p);
        CHECK(r.status == 3);
        CHECK(r.out.find("not idempotent") != std::string::npos);
        CHECK(r.out.find("F*F - F") != std::string::npos);
    }
}

TEST_CASE("solve --trace prints steps") {
    auto r = run_cli("solve --trace " + fixture_path("shift_3x3"));
    CHECK(r.status == 0);
    CHECK(r.out.find("trace:") != std::string::npos);
    CHECK(r.out.find("step 1") != std::string::npos);
}

TEST_CASE("gen is deterministic and its output solves to the requested rank") {
    std::string ring = "\"ring { field = Qt; sigma = shift(-1); delta = zero }\"";
    std::string a = tmp_file("gen_a.oreq"), b = tmp_file("gen_b.oreq");
    auto r1 = run_cli("gen --size 3 --rank 1 --seed 7 --ring " + ring + " -o " + a);
    auto r2 = run_cli("gen --size 3 --rank 1 --seed 7 --ring " + ring + " -o " + b);
    REQUIRE(r1.status == 0);
    REQUIRE(r2.status == 0);
    CHECK(slurp(a) == slurp(b));

    auto s = run_cli("solve " + a);
    CHECK(s.status == 0);
    CHECK(s.out.find("rank 1") != std::string::npos);

    SECTION("bad bounds exit 2") {
        CHECK(run_cli("gen --size 2 --rank 3 --ring " + ring).status == 2);
    }
    SECTION("ring from a file") {
        std::string rf = tmp_file("ring.txt");
        spit(rf, "ring { field = Qi; sigma = conj; delta = zero }\n");
        auto r = run_cli("gen --size 2 --rank 1 --seed 3 --ring " + rf);
        CHECK(r.status == 0);
        CHECK(r.out.find("field = Qi") != std::string::npos);
    }
}

TEST_CASE("fixtures subcommand runs the built-in problems") {
    auto r = run_cli("fixtures");
    CHECK(r.status == 0);
    CHECK(r.out.find("4/4 fixtures passed") != std::string::npos);

    auto t = run_cli("fixtures --trace");
    CHECK(t.status == 0);
    CHECK(t.out.find("step 1") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("").status == 2);
}
