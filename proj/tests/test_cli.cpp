#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("TORSEARCH_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "TORSEARCH_CLI must point at the binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::vector<std::string> sorted_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);)
        if (!line.empty()) lines.push_back(line);
    std::sort(lines.begin(), lines.end());
    return lines;
}

} // namespace

TEST_CASE("params emits the derived regime") {
    RunResult r = run_cli("params --q 5 --g 3 --L 5");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["T"] == 2);
    CHECK(j["M"] == 3);
    CHECK(j["N"] == 4);
}

TEST_CASE("tables emits the degree summary rows") {
    RunResult r = run_cli("tables --q 3 --U 2");
    REQUIRE(r.exit_code == 0);
    auto lines = sorted_lines(r.out);
    CHECK(std::find(lines.begin(), lines.end(), "3,2,0,54,27,3") != lines.end());
}

TEST_CASE("curve computes the class number of y^2 = x^3 - x") {
    RunResult r = run_cli("curve --q 3 --f [0,2,0,1]");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["h"] == 4);
    CHECK(j["genus"] == 1);
    CHECK(j["L_poly"] == json::array({1, 0, 3}));
}

TEST_CASE("curve accepts human-readable polynomials") {
    RunResult r = run_cli("curve --q 3 --f x^3+2*x");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["h"] == 4);
}

TEST_CASE("census --verify certifies every solution and reports the counts") {
    RunResult r = run_cli("census --q 3 --g 3 --L 5 --verify --format csv");
    REQUIRE(r.exit_code == 0);
    auto lines = sorted_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "3,3,5,2,3,4,39,96,156,96,0,0");
}

TEST_CASE("verify certifies the worked example") {
    RunResult r = run_cli("verify --q 5 --g 3 --m x --n x+1 --t 1");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["order"] == 3);
    CHECK(j["h"] == 9);
    CHECK(j["f"] == json::array({1, 2, 1, 4}));
}

TEST_CASE("verify rejects a malformed triple with a named reason and exit 4") {
    RunResult r = run_cli("verify --q 5 --g 3 --m x --n x --t 1");
    CHECK(r.exit_code == 4);
    json j = json::parse(r.out);
    CHECK(j["pass"] == false);
    CHECK(j["rejected"] == "not coprime");
}

TEST_CASE("charsum emits value, prediction and match") {
    RunResult r = run_cli("charsum --q 3 --B 3 --D 2");
    REQUIRE(r.exit_code == 0);
    auto lines = sorted_lines(r.out);
    CHECK(std::find(lines.begin(), lines.end(), "3,3,2,54,108,false") != lines.end());
    r = run_cli("charsum --q 3 --b x --D 1");
    REQUIRE(r.exit_code == 0);
}

TEST_CASE("exit codes: usage 2, budget 3") {
    CHECK(run_cli("census --q 4 --g 3 --L 5").exit_code == 2);   // q not an odd prime power
    CHECK(run_cli("census --q 3 --g 3").exit_code == 2);         // missing --L
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("census --q 3 --g 3 --L 5 --budget 5").exit_code == 3);
    CHECK(run_cli("params --q 5 --g 9 --L 3").exit_code == 2);   // no valid T
}

TEST_CASE("search JSONL is byte-identical across worker counts after sorting") {
    RunResult one = run_cli("search --q 3 --g 3 --L 5 --workers 1");
    RunResult four = run_cli("search --q 3 --g 3 --L 5 --workers 4");
    REQUIRE(one.exit_code == 0);
    REQUIRE(four.exit_code == 0);
    CHECK(sorted_lines(one.out) == sorted_lines(four.out));
    CHECK(sorted_lines(one.out).size() == 96);
    // JSONL schema spot check
    json j = json::parse(sorted_lines(one.out)[0]);
    CHECK(j.contains("m"));
    CHECK(j.contains("f"));
    CHECK(j["s_class"] == "S1");
    CHECK(j["q"] == 3);
}
