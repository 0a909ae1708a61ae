#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(std::vector<std::string> args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = veer::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("command line")
{
    TEST_CASE("documented examples")
    {
        CHECK(call({"sign", "-n", "4", "3 1 1 -2 -2 -2 -2 -2 -3"}).out == "positive\n");
        CHECK(call({"floor", "-n", "3", "1 2 1 1 2 1 1 -2"}).out == "1\n");
        CHECK(call({"theta", "-n", "3", "1 2 2 1 -2 -2 -2"}).out == "nonzero (no incoming rectangles)\n");
    }

    TEST_CASE("order verbs")
    {
        CHECK(call({"sign", "-n", "2", "-1"}).out == "negative\n");
        CHECK(call({"sign", "-n", "3", "1 -1"}).out == "zero\n");
        CHECK(call({"cmp", "-n", "3", "-1", ""}).out == "less\n");
        CHECK(call({"cmp", "-n", "3", "1 2 1", "2 1 2"}).out == "equal\n");
        const Outcome e = call({"eq", "-n", "3", "1 2 1", "2 1 2"});
        CHECK(e.code == 0);
        CHECK(e.out == "equal\n");
        const Outcome ne = call({"eq", "-n", "3", "1 2", "2 1"});
        CHECK(ne.code == 1);
        CHECK(ne.out == "different\n");
        CHECK(call({"fdtc", "-n", "2", "--depth", "8", "1"}).out == "1/2 5/8\n");
        CHECK(call({"fdtc", "-n", "3", "--depth", "4", "1 2 1 2 1 2"}).out == "1 5/4\n");
        CHECK(call({"sl", "-n", "2", "1 1 1"}).out == "1\n");
    }

    TEST_CASE("grid verbs")
    {
        CHECK(call({"grid", "-n", "1", ""}).out == "{\"n\":2,\"X\":[0,1],\"O\":[1,0]}\n");
        CHECK(call({"grid", "-n", "1", "--ascii", ""}).out == "OX\nXO\n");
        const Outcome c = call({"grid", "-n", "3", "--compact", "1 1 2"});
        CHECK(c.code == 0);
        const auto j = nlohmann::json::parse(c.out);
        CHECK(j.at("n").get<int>() == static_cast<int>(j.at("X").size()));
    }

    TEST_CASE("theta from a grid file and stdin")
    {
        const Outcome a = call({"theta", "--grid", "-"}, R"({"n":2,"X":[0,1],"O":[1,0]})");
        CHECK(a.code == 0);
        CHECK(a.out == "nonzero (no incoming rectangles)\n");
        const Outcome b = call({"--json", "theta", "-n", "2", "-1"});
        const auto j = nlohmann::json::parse(b.out);
        CHECK(j.at("status") == "zero");
        CHECK(j.at("witness_size").get<int>() >= 1);
        CHECK(j.at("sl") == -3 + 0);
        const Outcome c = call({"theta", "-n", "2", "-"}, "1 1 1");
        CHECK(c.out.rfind("nonzero", 0) == 0);
        const std::string path = "veer_cli_test_grid.json";
        {
            std::ofstream f(path);
            f << R"({"n":3,"X":[0,1,2],"O":[1,2,0]})";
        }
        CHECK(call({"theta", "--grid", path}).code == 0);
        std::remove(path.c_str());
        CHECK(call({"theta", "--grid", "no-such-file.json"}).code == 2);
        CHECK(call({"theta", "--grid", "-"}, "{").code == 2);
        CHECK(call({"theta", "--grid", "-"}, R"({"n":2,"X":[0,1],"O":[0,1]})").code == 2);
    }

    TEST_CASE("json outputs round trip")
    {
        for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
                 {"--json", "sign", "-n", "3", "1 -2"},
                 {"--json", "floor", "-n", "3", "1 2 1 1 2 1"},
                 {"--json", "fdtc", "-n", "3", "--depth", "2", "1 2"},
                 {"--json", "rv", "-n", "3", "2 -1"},
                 {"--json", "murasugi", "--variant", "a", "-d", "0", "--params", "2", "1"},
                 {"--json", "theta", "-n", "3", "1 2 2 1 -2"}}) {
            const Outcome o = call(args);
            CHECK(o.code == 0);
            const auto j = nlohmann::json::parse(o.out);
            CHECK(nlohmann::json::parse(j.dump()) == j);
        }
        const auto rv = nlohmann::json::parse(call({"--json", "rv", "-n", "3", "2 -1"}).out);
        CHECK(rv.at("status") == "non-right-veering");
        CHECK(rv.at("certificate") == "sigma1-negative-word");
    }

    TEST_CASE("murasugi verb")
    {
        const Outcome o = call({"murasugi", "--variant", "b", "-d", "1", "--params", "-6", "--theta"});
        CHECK(o.code == 0);
        CHECK(o.out.find("right-veering") != std::string::npos);
        CHECK(call({"murasugi", "--variant", "c", "-d", "0", "--params", "2"}).code == 2);
        CHECK(call({"murasugi", "--variant", "z", "-d", "0", "--params", "2"}).code == 2);
    }

    TEST_CASE("exit codes")
    {
        CHECK(call({}).code == 2);
        CHECK(call({"frobnicate"}).code == 2);
        CHECK(call({"sign", "1 2"}).code == 2);
        CHECK(call({"sign", "-n", "3", "3"}).code == 2);
        CHECK(call({"sign", "-n", "3", "1 q"}).code == 2);
        CHECK(call({"cmp", "-n", "3", "1", "1"}, "").code == 0);
        CHECK(call({"floor", "-n", "1", ""}).code == 2);
        CHECK(call({"theta", "-n", "3"}).code == 2);
        CHECK(call({"theta", "-n", "3", "--n-max", "3", "--full-grading", "--no-shorten", "1 1 1 -2"}).code == 3);
        CHECK(call({"--help"}).code == 0);
    }

    TEST_CASE("sweep is reproducible")
    {
        const Outcome a = call({"sweep", "--part", "floor", "--seed", "7", "--samples", "5"});
        const Outcome b = call({"sweep", "--part", "floor", "--seed", "7", "--samples", "5"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        const Outcome j = call({"--json", "sweep", "--part", "floor", "--seed", "7", "--samples", "5"});
        const auto r = nlohmann::json::parse(j.out);
        CHECK(r.at("floor").at("vanishing") == 0);
        CHECK(r.at("floor").at("words") == 5);
    }

    TEST_CASE("selftest")
    {
        const Outcome o = call({"selftest"});
        CHECK(o.code == 0);
        CHECK(o.out.find("FAIL") == std::string::npos);
    }
}
