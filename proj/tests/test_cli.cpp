#include "anick/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace anick;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "anick");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("anick_test_" + name)).string();
}

void write(const std::string& path, const std::string& text)
{
    std::ofstream(path) << text;
}

}  // namespace

TEST_CASE("groebner on the TL3 preset")
{
    Run r = run({"groebner", "--preset", "tl3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("basis (4 elements") != std::string::npos);
    CHECK(r.out.find("complete: true") != std::string::npos);
    CHECK(r.out.find("confluent: true") != std::string::npos);

    Run j = run({"groebner", "--preset", "tl3", "--format", "json"});
    REQUIRE(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["engine"]["version"] == "1.0.0");
    CHECK(doc["config"]["preset"] == "tl3");
    CHECK(doc["result"]["basis"].size() == 4);
    CHECK(doc["result"]["complete"] == true);
    CHECK(doc["result"]["ambiguities"].size() == 8);
}

TEST_CASE("groebner on the B3 monoid stops at the cap")
{
    Run j = run({"groebner", "--preset", "b3-monoid", "--degree-cap", "8", "--format", "json"});
    REQUIRE(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["result"]["basis"].size() == 5);
    CHECK(doc["result"]["complete"] == false);
    CHECK(doc["result"]["pending_degree"] == 9);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == 1);
    CHECK(run({"groebner"}).code == 1);
    CHECK(run({"groebner", "--preset", "tl3", "--degree-cap", "0"}).code == 1);
    CHECK(run({"groebner", "--preset", "nope"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"groebner", "--preset", "tl3", "--file", "x.json"}).code == 1);
    CHECK(run({"groebner", "--file", "/nonexistent/file.json"}).code == 1);
    CHECK(run({"homology", "--preset", "tl3", "--tau", "abc"}).code == 1);

    Run limit = run({"chains", "--preset", "b3-monoid", "--degree-cap", "6"});
    CHECK(limit.code == 2);
    CHECK(limit.err.find("--degree-cap") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("malformed presentation files report line and column")
{
    std::string bad = temp_path("bad.json");
    write(bad, "{\"format\": 1,\n \"generators\": [\"x\", \"y\"],\n \"relations\": [\"x*y - y*\"]}\n");
    Run r = run({"groebner", "--file", bad});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 3, column 25") != std::string::npos);

    write(bad, "{\"format\": 1,\n \"generators\": [\"x\"\n}");
    r = run({"groebner", "--file", bad});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 3") != std::string::npos);

    write(bad, "{\"format\": 2, \"generators\": [\"x\"], \"relations\": []}");
    CHECK(run({"groebner", "--file", bad}).code == 1);
    std::remove(bad.c_str());
}

TEST_CASE("presentation round trip")
{
    for (const char* id : {"tl3", "b3-monoid", "tl4"}) {
        Run exported = run({"presentation", "--preset", id, "--format", "json"});
        REQUIRE(exported.code == 0);
        std::string file = temp_path(std::string(id) + ".json");
        write(file, nlohmann::ordered_json::parse(exported.out)["result"].dump(2));
        Run a = run({"groebner", "--preset", id, "--degree-cap", "7", "--format", "json"});
        Run b = run({"groebner", "--file", file, "--degree-cap", "7", "--format", "json"});
        REQUIRE(a.code == 0);
        REQUIRE(b.code == 0);
        CHECK(nlohmann::json::parse(a.out)["result"] == nlohmann::json::parse(b.out)["result"]);
        std::remove(file.c_str());
    }
}

TEST_CASE("chains, resolution and homology reports")
{
    Run c = run({"chains", "--preset", "tl3", "--max-level", "3", "--format", "json"});
    REQUIRE(c.code == 0);
    auto levels = nlohmann::json::parse(c.out)["result"]["levels"];
    REQUIRE(levels.size() == 5);
    CHECK(levels[1]["count"] == 2);
    CHECK(levels[2]["count"] == 4);
    CHECK(levels[3]["count"] == 8);
    CHECK(levels[4]["count"] == 16);

    Run r = run({"resolution", "--preset", "tl3", "--max-level", "3", "--check", "--tau", "3/2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("d_1(e1*e1 (x) 1) = e1 (x) e1 - tau*e1 (x) 1") != std::string::npos);
    CHECK(r.out.find("NOT EXACT") == std::string::npos);

    Run h = run({"homology", "--preset", "tl3", "--max-level", "3", "--tau", "generic", "--tau", "0", "--format", "json"});
    REQUIRE(h.code == 0);
    auto betti = nlohmann::json::parse(h.out)["result"]["tau_dependence"]["betti"];
    CHECK(betti["columns"] == nlohmann::json::array({"generic", "0"}));
    CHECK(betti["rows"][0]["differs_from_first"].size() == 2);

    Run o = run({"oracle", "--preset", "tl3", "--tau", "0", "--max-degree", "2", "--format", "json"});
    REQUIRE(o.code == 0);
    CHECK(nlohmann::json::parse(o.out)["result"]["rows"].size() == 3);

    Run hs = run({"hilbert", "--preset", "tl3", "--length-cap", "4"});
    CHECK(hs.out.find("1 2 2 0 0") != std::string::npos);
}

TEST_CASE("braid images agree on the braid relation")
{
    Run a = run({"braid-image", "--preset", "tl3", "--word", "s1 s2 s1", "--format", "json"});
    Run b = run({"braid-image", "--preset", "tl3", "--word", "s2 s1 s2", "--format", "json"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(nlohmann::json::parse(a.out)["result"]["image"] == nlohmann::json::parse(b.out)["result"]["image"]);
    CHECK(run({"braid-image", "--preset", "b3-monoid", "--word", "s1"}).code == 1);
    CHECK(run({"braid-image", "--preset", "tl3", "--word", "s4"}).code == 1);
}

TEST_CASE("output file and determinism")
{
    std::string file = temp_path("out.txt");
    Run r = run({"resolution", "--preset", "tl3", "--max-level", "3", "--output", file});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::stringstream written;
    written << std::ifstream(file).rdbuf();
    Run again = run({"resolution", "--preset", "tl3", "--max-level", "3"});
    CHECK(written.str() == again.out);
    std::remove(file.c_str());
}
