#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "skewdyck/cli.hpp"

using skewdyck::cli::run;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count returns the figure values") {
    Run r = invoke({"count", "--model", "l2r", "--policy", "no-peak-1", "--length", "8",
                    "--level", "0"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] == "count");
    CHECK(j["data"]["count"] == "22");
    CHECK(j["status"] == "ok");

    r = invoke({"count", "--model", "l2r", "--policy", "all", "--length", "6", "--level", "0",
                "--format", "text"});
    CHECK(r.out == "10\n");

    r = invoke({"count", "--length", "5", "--open", "--format", "text"});
    CHECK(r.out == "8\n");
}

TEST_CASE("count table output") {
    Run r = invoke({"count", "--length", "4", "--table", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,j,f,g,h,total\n0,0,1,0,0,1\n", 0) == 0);
    CHECK(r.out.find("4,0,0,1,1,2\n") != std::string::npos);

    r = invoke({"count", "--length", "4", "--table", "--model", "r2l"});
    json j = json::parse(r.out);
    CHECK(j["data"]["entries"][0]["a"] == "1");
}

TEST_CASE("series emits coefficient lists lowest exponent first") {
    Run r = invoke({"series", "--gf", "y", "--order", "7", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,0,2,6,22,84,334\n");

    r = invoke({"series", "--gf", "r1", "--order", "4"});
    json j = json::parse(r.out);
    CHECK(j["data"]["valuation"] == -1);
    CHECK(j["data"]["first_exponent"] == -1);
    // z^-1 - z - z^3 - ...
    std::vector<std::string> want = {"1", "0", "-1", "0", "-1"};
    CHECK(j["data"]["coefficients"].get<std::vector<std::string>>() == want);

    r = invoke({"series", "--gf", "sj:2", "--order", "8", "--format", "csv"});
    CHECK(r.out.rfind("exponent,coefficient\n0,0\n1,0\n2,1\n", 0) == 0);

    r = invoke({"series", "--gf", "sj:x", "--order", "8"});
    CHECK(r.code == 2);
    r = invoke({"series", "--gf", "nope", "--order", "8"});
    CHECK(r.code == 2);
}

TEST_CASE("enumerate emits steps") {
    Run r = invoke({"enumerate", "--length", "6", "--level", "0", "--model", "l2r", "--policy",
                    "no-peak-1", "--emit", "steps"});
    CHECK(r.code == 0);
    CHECK(r.out == "UUUDDD\nUUUDDd\nUUUDdD\nUUUDdd\nUUDUDD\nUUDUDd\n");

    r = invoke({"enumerate", "--length", "2", "--level", "0", "--policy", "no-peak-1"});
    json j = json::parse(r.out);
    CHECK(j["data"]["count"] == 0);

    // cap guard and override
    r = invoke({"enumerate", "--length", "18", "--level", "0"});
    CHECK(r.code == 2);
    r = invoke({"enumerate", "--length", "18", "--level", "18", "--enum-cap", "18"});
    CHECK(r.code == 0);
}

TEST_CASE("verify exercises the suites") {
    Run r = invoke({"verify", "--suite", "identities", "--order", "24"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["data"]["pass"] == true);
    CHECK(j["data"]["suites"].size() == 1);
    CHECK(j["data"]["suites"][0]["suite"] == "identities");

    r = invoke({"verify", "--suite", "recurrence", "--dp-max", "30", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("recurrence: PASS (range 1..27)") != std::string::npos);
    CHECK(r.out.find("-5") != std::string::npos);
}

TEST_CASE("oeis-compare offline") {
    Run r = invoke({"oeis-compare", "--anumber", "A128723", "--terms", "15", "--offline"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["data"]["matched"] == 15);
    CHECK(j["data"]["source"] == "fixture");
    CHECK(j["status"] == "ok");

    r = invoke({"oeis-compare", "--terms", "15", "--offline", "--format", "text"});
    CHECK(r.out == "15/15 matched (indices 0..14)\n");

    // a deliberately broken fixture trips the mismatch exit code
    r = invoke({"oeis-compare", "--terms", "4", "--offline", "--fixture-dir",
                SKEWDYCK_TEST_BAD_FIXTURES});
    CHECK(r.code == 1);
    j = json::parse(r.out);
    CHECK(j["status"] == "fail");
    CHECK(j["data"]["first_mismatch"]["index"] == 2);

    // missing fixture directory is an environment error, not a mismatch
    r = invoke({"oeis-compare", "--offline", "--fixture-dir", "/no/such/dir"});
    CHECK(r.code == 2);
    CHECK(r.err.find("missing fixture") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(invoke({"count", "--length", "4"}).code == 2);            // no selector
    CHECK(invoke({"count", "--length", "4", "--level", "6"}).code == 2);
    CHECK(invoke({"count", "--length", "4", "--level", "0", "--open"}).code == 2);
    CHECK(invoke({"bogus"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"count", "--length", "4", "--level", "0", "--wat"}).code == 2);
    CHECK(invoke({"enumerate", "--length", "-3", "--level", "0"}).code == 2);
    Run help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("enumerate") != std::string::npos);
}

TEST_CASE("output is deterministic") {
    std::vector<std::string> argv = {"verify", "--suite", "cross", "--enum-max", "6"};
    Run a = invoke(argv);
    Run b = invoke(argv);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    argv = {"series", "--gf", "dual-open", "--order", "16"};
    CHECK(invoke(argv).out == invoke(argv).out);
}
