#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "json.hpp"

// TAUT_GM_BIN is injected by the build as the absolute path of the CLI.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(TAUT_GM_BIN) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    r.exit_code = WEXITSTATUS(status);
    return r;
}

nlohmann::json parse(const RunResult& r) {
    REQUIRE(r.exit_code == 0);
    return nlohmann::json::parse(r.out);
}

std::string strip_timing(std::string s) {
    return std::regex_replace(s, std::regex("\"timing_ms\": [0-9]+"), "\"timing_ms\": X");
}

}  // namespace

TEST_CASE("exit codes separate success, failed checks, usage, and capacity") {
    CHECK(run_cli("constants").exit_code == 0);
    CHECK(run_cli("betti").exit_code == 0);
    CHECK(run_cli("kimura --bprim 4").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("gram --m 1").exit_code == 2);
    CHECK(run_cli("injectivity --m 2 --codim 6 --method bogus").exit_code == 2);
    CHECK(run_cli("kimura --bprim 7").exit_code == 2);
    CHECK(run_cli("kimura --bprim 5").exit_code == 3);
    CHECK(run_cli("kimura --bprim 6").exit_code == 3);

    const auto over = run_cli("kimura --bprim 5", true);
    CHECK(over.out.find("exceeds the materializable range") != std::string::npos);
    const auto usage = run_cli("kimura --bprim 7", true);
    CHECK(usage.out.find("usage:") != std::string::npos);
}

TEST_CASE("constants envelope carries schema, convention, and exact values") {
    const auto j = parse(run_cli("constants"));
    CHECK(j["schema"] == "taut-gm/1");
    CHECK(j["engine_version"] == "1.0.0");
    CHECK(j["command"] == "constants");
    CHECK(j["params"]["b_prim"] == 22);
    const std::string conv = j["convention"];
    CHECK(conv.find("rank-2 quotient bundle on Gr(2,5)") != std::string::npos);
    CHECK(j["results"]["lambda"] == "-1");
    CHECK(j["results"]["mu"] == "1");
    CHECK(j["results"]["nu"] == "5/3");
    CHECK(j["results"]["h6"] == "10");
    CHECK(j["results"]["ch4"] == "6");
    CHECK(j["results"]["c3"] == "2");
    CHECK(j["all_pass"] == true);
    CHECK(j.contains("timing_ms"));
}

TEST_CASE("injectivity reports the middle-codimension count of the square") {
    const auto j = parse(run_cli("injectivity --m 2 --codim 6"));
    CHECK(j["results"]["monomials"] == 17);
    CHECK(j["results"]["rank"] == 17);
    CHECK(j["results"]["injective"] == true);
    CHECK(j["params"]["method"] == "gram");
    const auto jm = parse(run_cli("injectivity --m 2 --codim 6 --method model"));
    CHECK(jm["results"]["rank"] == 17);
    CHECK(jm["results"]["injective"] == true);
}

TEST_CASE("kimura reports term count and the vanishing boundary") {
    const auto j = parse(run_cli("kimura --bprim 2"));
    CHECK(j["results"]["terms"] == 6);
    CHECK(j["results"]["evaluates_to_zero"] == true);
    CHECK(j["results"]["nonzero_with_bprim_plus_one"] == true);
    CHECK(j["all_pass"] == true);
}

TEST_CASE("verify-relations and mck-check succeed with full check lists") {
    const auto rel = parse(run_cli("verify-relations"));
    CHECK(rel["all_pass"] == true);
    CHECK(rel["results"]["checks"].size() == 11);
    for (const auto& c : rel["results"]["checks"]) {
        CHECK(c["in_model"] == true);
        CHECK(c["in_rewrite"] == true);
    }

    const auto mck = parse(run_cli("mck-check"));
    CHECK(mck["all_pass"] == true);
    CHECK(mck["results"]["ck"]["all_pass"] == true);
    CHECK(mck["results"]["ck"]["checks"].size() == 88);
    CHECK(mck["results"]["mck"]["triples_checked"] == 469);
    CHECK(mck["results"]["mck"]["control_nonzero"] == true);
    CHECK(mck["results"]["involution"]["all_pass"] == true);
}

TEST_CASE("output is deterministic apart from the timing field") {
    const auto a = run_cli("gram --m 2 --codim 4");
    const auto b = run_cli("gram --m 2 --codim 4");
    CHECK(a.exit_code == 0);
    CHECK(strip_timing(a.out) == strip_timing(b.out));
}

TEST_CASE("thread count does not change the payload") {
    const std::string cmd =
        "TAUT_GM_THREADS=3 " + std::string(TAUT_GM_BIN) + " gram --m 2 --codim 6 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string threaded;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) threaded.append(buf, n);
    REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);
    const auto plain = run_cli("gram --m 2 --codim 6");
    CHECK(strip_timing(plain.out) == strip_timing(threaded));
}

TEST_CASE("gram CSV matches the JSON matrix entry for entry") {
    const auto j = parse(run_cli("gram --m 1 --codim 3"));
    const auto csv = run_cli("gram --m 1 --codim 3 --format csv");
    CHECK(csv.exit_code == 0);
    std::ostringstream expect;
    for (const auto& row : j["results"]["matrix"]) {
        for (std::size_t k = 0; k < row.size(); ++k)
            expect << (k ? "," : "") << row[k].get<std::string>();
        expect << "\n";
    }
    CHECK(csv.out == expect.str());
}

TEST_CASE("betti CSV lists one degree per row") {
    const auto csv = run_cli("betti --format csv");
    CHECK(csv.exit_code == 0);
    std::istringstream lines(csv.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "degree,rank");
    int rows = 0;
    long total = 0;
    while (std::getline(lines, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        CHECK(std::stoi(line.substr(0, comma)) == rows);
        total += std::stol(line.substr(comma + 1));
        ++rows;
    }
    CHECK(rows == 13);
    CHECK(total == 32);
}

TEST_CASE("CSV is refused for scalar reports") {
    CHECK(run_cli("constants --format csv").exit_code == 2);
    const auto msg = run_cli("constants --format csv", true);
    CHECK(msg.out.find("CSV is for matrices and rank tables") != std::string::npos);
}

TEST_CASE("--out writes the payload atomically") {
    const std::string path = "/tmp/taut_gm_cli_test_out.json";
    std::remove(path.c_str());
    std::remove((path + ".tmp").c_str());
    const auto r = run_cli("constants --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    const auto j = nlohmann::json::parse(content.str());
    CHECK(j["results"]["nu"] == "5/3");
    std::ifstream tmp(path + ".tmp");
    CHECK(!tmp.good());
    std::remove(path.c_str());
}
