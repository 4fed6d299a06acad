#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SLIDEPOLY_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t nl = s.find('\n', pos);
        if (nl == std::string::npos) nl = s.size();
        lines.push_back(s.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

}  // namespace

TEST_CASE("enumerate prints one record per filling plus a count") {
    RunResult r = run_cli("enumerate SSRIF 0,3,0,2");
    CHECK(r.status == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 31);
    CHECK(lines.back() == "count 30");
    for (size_t i = 0; i + 1 < lines.size(); ++i) {
        nlohmann::json j = nlohmann::json::parse(lines[i]);
        CHECK(j.at("family") == "SSRIF");
        CHECK(j.at("shape") == "0,3,0,2");
        CHECK(j.at("rows").size() == 4);
    }
}

TEST_CASE("enumerate honors the entry cap") {
    RunResult r = run_cli("enumerate SSRIT 1,2,2 --max-entry 4");
    CHECK(r.status == 0);
    CHECK(lines_of(r.out).back() == "count 38");
}

TEST_CASE("genfun prints the canonical polynomial string") {
    RunResult r = run_cli("genfun FSLIDE 0,2,1");
    CHECK(r.status == 0);
    CHECK(r.out == "1*x^[0,2,1] + 1*x^[1,1,1] + 1*x^[2,0,1] + 1*x^[2,1,0]\n");
}

TEST_CASE("genfun record mode emits one JSON term per line") {
    RunResult r = run_cli("genfun MONO_QS 1,2 --vars 3 --records");
    CHECK(r.status == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    nlohmann::json j = nlohmann::json::parse(lines[0]);
    CHECK(j.at("coeff") == "1");
    CHECK(j.at("exp") == nlohmann::json::array({0, 1, 2}));
}

TEST_CASE("expand emits the frozen table and agrees with the oracle") {
    RunResult r = run_cli("expand DREV_SLIDE 0,3,0,2 FSLIDE --oracle");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "# DREV_SLIDE[0,3,0,2] -> FSLIDE\n"
          "1\t0,3,0,2\n1\t0,4,0,1\n1\t1,3,0,1\n1\t2,2,0,1\n"
          "oracle agreement: yes\n");
}

TEST_CASE("expand falls back to the generic solver for unnamed pairs") {
    RunResult r = run_cli("expand FSLIDE 0,2,1 FSLIDE");
    CHECK(r.status == 0);
    CHECK(lines_of(r.out)[1] == "1\t0,2,1");
}

TEST_CASE("verify passes and reports per identity") {
    RunResult r = run_cli("verify thm-1.1 rditoqs --max-n 4 --max-len 3 --max-vars 3 --jobs 2");
    CHECK(r.status == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].find("identity=thm-1.1") == 0);
    CHECK(lines[0].find("status=PASS") != std::string::npos);
    CHECK(lines[1].find("identity=rditoqs") == 0);
}

TEST_CASE("verify rejects unknown identities") {
    CHECK(run_cli("verify no-such-identity").status == 1);
}

TEST_CASE("insert round-trips a record through the inverse") {
    std::string rec = R"({"family":"SIF","rows":[[1,3],[],[2,4,5],[]],"shape":"2,0,3,0"})";
    RunResult r = run_cli("insert '" + rec + "' --invert");
    CHECK(r.status == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] ==
          R"({"family":"YSF","rows":[[1,4],[],[2,3,5],[]],"shape":"2,0,3,0"})");
    CHECK(lines[1] ==
          R"({"family":"DIRF","rows":[[4,5],[],[1,2,3],[]],"shape":"2,0,3,0"})");
    CHECK(lines[2] == rec);
}

TEST_CASE("insert --trace logs the bumps") {
    std::string rec = R"({"family":"SIF","rows":[[1,3],[],[2,4,5],[]],"shape":"2,0,3,0"})";
    RunResult r = run_cli("insert '" + rec + "' --trace");
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 8);
    CHECK(lines[0] == "place 2 - -> (3,1)");
    CHECK(lines[5] == "bump 4 (3,2) -> (1,2)");
}

TEST_CASE("insert rejects records from other families") {
    std::string rec = R"({"family":"SRIF","rows":[[2,1]],"shape":"2"})";
    CHECK(run_cli("insert '" + rec + "'").status == 1);
}

TEST_CASE("--out writes the same bytes to a file") {
    std::string path = "/tmp/slidepoly_cli_test_out.txt";
    RunResult r = run_cli("--out " + path + " genfun FSLIDE 0,2,1");
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::array<char, 256> buf;
    size_t got = fread(buf.data(), 1, buf.size(), f);
    fclose(f);
    remove(path.c_str());
    CHECK(std::string(buf.data(), got) ==
          "1*x^[0,2,1] + 1*x^[1,1,1] + 1*x^[2,0,1] + 1*x^[2,1,0]\n");
}
