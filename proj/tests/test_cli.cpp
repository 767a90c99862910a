#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "minann/cli.hpp"
#include "minann/report.hpp"

using namespace minann;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json first_json(const std::string& text) { return json::parse(text); }

}  // namespace

TEST_CASE("model reports for the three families") {
    RunResult r = run({"model", "parabolic", "-p", "2", "-q", "3"});
    CHECK(r.code == 0);
    json j = first_json(r.out);
    CHECK(j["rank"] == 6);
    CHECK(j["all_pass"] == true);

    r = run({"model", "lotka_volterra", "-p", "1"});
    CHECK(r.code == 0);
    CHECK(first_json(r.out)["rank"] == 4);

    r = run({"model", "toy", "-p", "1", "-q", "1"});
    CHECK(r.code == 0);
    CHECK(first_json(r.out)["rank"] == 2);
}

TEST_CASE("model --dump embeds a loadable model") {
    RunResult r = run({"model", "parabolic", "-p", "1", "-q", "2", "--dump"});
    REQUIRE(r.code == 0);
    json j = first_json(r.out);
    REQUIRE(j.contains("model"));
    HomologyModel m = model_from_json(j["model"]);
    CHECK(m.rank == 4);
    CHECK(validate(m).all_pass());
    // exact rationals serialized as num/den strings
    CHECK(j["model"]["critical_value"] == "4/27");
}

TEST_CASE("usage errors exit nonzero") {
    CHECK(run({"model", "nosuch", "-p", "1"}).code != 0);
    CHECK(run({"model", "parabolic"}).code != 0);
    CHECK(run({"model", "parabolic", "-p", "2", "-q", "4"}).code == 2);  // not coprime
    CHECK(run({}).code != 0);
    CHECK(run({"frobnicate"}).code != 0);
}

TEST_CASE("minimal reports the closure, orbit, kernel, and window") {
    RunResult r = run({"minimal", "parabolic", "-p", "2", "-q", "3"});
    REQUIRE(r.code == 0);
    json j = first_json(r.out);
    CHECK(j["closure_dim"] == 5);
    CHECK(j["closure_certified"] == true);
    CHECK(j["orbit_size"] == 1);
    CHECK(j["zero_kernel_dim"] == 1);
    CHECK(j["annihilator_order_low"] == 4);
    CHECK(j["annihilator_order_high"] == 5);

    r = run({"minimal", "lotka_volterra", "-p", "3"});
    REQUIRE(r.code == 0);
    j = first_json(r.out);
    CHECK(j["closure_dim"] == 2);
    CHECK(j["orbit_size"] == 3);
    CHECK(j["annihilator_order_high"] == 2);

    r = run({"minimal", "parabolic", "-p", "3", "-q", "5"});
    REQUIRE(r.code == 0);
    j = first_json(r.out);
    CHECK(j["zero_kernel_dim"] == 0);
    CHECK(j["annihilator_order_low"] == 8);
    CHECK(j["annihilator_order_high"] == 8);
}

TEST_CASE("minimal rejects the toy family with an explanation") {
    RunResult r = run({"minimal", "toy", "-p", "1", "-q", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("toy") != std::string::npos);
}

TEST_CASE("minimal rejects an undersized exponent bound") {
    RunResult r = run({"minimal", "parabolic", "-p", "2", "-q", "3", "--exponent-bound", "5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("exponent bound") != std::string::npos);
}

TEST_CASE("sweep emits one line per pair plus a summary") {
    RunResult r = run({"sweep", "--family", "parabolic", "--max-pq", "4"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<json> reports;
    while (std::getline(lines, line)) reports.push_back(json::parse(line));
    REQUIRE(reports.size() >= 2);
    json summary = reports.back();
    CHECK(summary["all_pass"] == true);
    CHECK(summary["pairs"] == reports.size() - 1);
    for (size_t i = 0; i + 1 < reports.size(); i++) {
        const json& rep = reports[i];
        CHECK(rep["closure_dim"] == rep["p"].get<int>() + rep["q"].get<int>());
    }
}

TEST_CASE("sweep over the toy family checks ranks and relations") {
    RunResult r = run({"sweep", "--family", "toy", "--max-pq", "4"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<json> reports;
    while (std::getline(lines, line)) reports.push_back(json::parse(line));
    for (size_t i = 0; i + 1 < reports.size(); i++)
        CHECK(reports[i]["rank"] == reports[i]["p"].get<int>() + reports[i]["q"].get<int>());
}

TEST_CASE("sweep output is deterministic and independent of job count") {
    RunResult a = run({"sweep", "--family", "lotka_volterra", "--max-pq", "6"});
    RunResult b = run({"sweep", "--family", "lotka_volterra", "--max-pq", "6"});
    RunResult c =
        run({"sweep", "--family", "lotka_volterra", "--max-pq", "6", "--jobs", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    // the job count is echoed in the command line, so compare the payloads
    std::istringstream la(a.out), lc(c.out);
    std::string sa, sc;
    while (std::getline(la, sa) && std::getline(lc, sc)) {
        json ja = json::parse(sa), jc = json::parse(sc);
        ja.erase("command");
        jc.erase("command");
        CHECK(ja == jc);
    }
    std::istringstream lines(a.out);
    std::vector<json> reports;
    while (std::getline(lines, sa)) reports.push_back(json::parse(sa));
    for (size_t i = 0; i + 1 < reports.size(); i++)
        CHECK(reports[i]["orbit_size"] == reports[i]["p"].get<int>());
}

TEST_CASE("repeated runs produce identical bytes") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"model", "parabolic", "-p", "3", "-q", "4"},
             {"minimal", "lotka_volterra", "-p", "2"},
             {"annihilate", "--solutions", "log(t);1"}}) {
        RunResult a = run(args), b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("annihilate matches the worked examples") {
    RunResult r = run({"annihilate", "--solutions", "log(t);1"});
    REQUIRE(r.code == 0);
    json j = first_json(r.out);
    CHECK(j["order"] == 2);
    CHECK(j["reduced"] == true);
    CHECK(j["coefficients"][0]["is_rational"] == true);
    CHECK(j["coefficients"][1]["text"] == "0");
    CHECK(j["all_pass"] == true);

    r = run({"annihilate", "--solutions", "(t)^(1/2)"});
    REQUIRE(r.code == 0);
    j = first_json(r.out);
    CHECK(j["order"] == 1);
    CHECK(j["coefficients"][0]["is_rational"] == true);

    r = run({"annihilate", "--solutions", "t;t"});
    CHECK(r.code == 2);
    CHECK(r.err.find("Wronskian") != std::string::npos);

    r = run({"annihilate", "--solutions", "log(2*t)"});
    CHECK(r.code == 2);
    CHECK(r.err.find("position") != std::string::npos);
}

TEST_CASE("the model cache round-trips through the dump format") {
    std::filesystem::path dir = "minann_cache_test";
    std::filesystem::remove_all(dir);
    REQUIRE(std::filesystem::create_directory(dir));
    setenv("MINANN_CACHE_DIR", dir.c_str(), 1);
    RunResult first = run({"model", "parabolic", "-p", "2", "-q", "5"});
    std::ifstream cached(dir / "parabolic_2_5.json");
    REQUIRE(cached.good());
    HomologyModel m = model_from_json(json::parse(cached));
    CHECK(m.rank == 8);
    RunResult second = run({"model", "parabolic", "-p", "2", "-q", "5"});
    CHECK(first.out == second.out);
    CHECK(second.code == 0);
    unsetenv("MINANN_CACHE_DIR");
    std::filesystem::remove_all(dir);
}

#ifdef MINANN_BIN
TEST_CASE("the installed binary is byte-deterministic across processes") {
    auto capture = [](const std::string& cmd) {
        std::string out;
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        char buf[4096];
        size_t n;
        while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
        int status = pclose(pipe);
        REQUIRE(status == 0);
        return out;
    };
    std::string cmd = std::string(MINANN_BIN) + " minimal parabolic -p 2 -q 3";
    std::string a = capture(cmd), b = capture(cmd);
    CHECK(!a.empty());
    CHECK(a == b);
}
#endif
