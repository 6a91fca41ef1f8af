#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qrabi/cli.hpp"

using namespace qrabi::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "qrabi");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("sweep syntax")
{
    CHECK(parse_sweep("0.3").values() == std::vector<double>{0.3});
    CHECK(parse_sweep("0:1:0.25").values().size() == 5);
    CHECK_THROWS_AS(parse_sweep("0:1"), ConfigError);
    CHECK_THROWS_AS(parse_sweep("0:1:-0.1"), ConfigError);
    CHECK_THROWS_AS(parse_sweep("1:0:0.1"), ConfigError);
    CHECK_THROWS_AS(parse_sweep("a:b:c"), ConfigError);
}

TEST_CASE("number formatting uses 12 significant digits")
{
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1e-20) == "1e-20");
    CHECK(round12(0.1 + 0.2) == 0.3);
}

TEST_CASE("spectrum output shape")
{
    const Run r = invoke({"spectrum", "--g", "0:0.2:0.1", "--levels", "4", "--methods", "bgrwa,ed"});
    REQUIRE(r.code == 0);
    const Table t = table_from_csv(r.out);
    CHECK(t.rows.size() == 3);
    CHECK(t.columns.front() == "g");
    CHECK(t.columns.size() == 1 + 4 + 4 + 1);
    CHECK(t.rows[0][1] == doctest::Approx(t.rows[0][5]));
}

TEST_CASE("compare adds ED and deviation columns")
{
    RunConfig c;
    c.command = Command::Compare;
    c.methods = {qrabi::Method::BGRWA};
    c.g = "0.1";
    c.levels = 3;
    const Table t = run(c);
    CHECK(t.columns == std::vector<std::string>{"g", "bgrwa_E0", "bgrwa_E1", "bgrwa_E2", "ed_E0", "ed_E1", "ed_E2",
                                                "bgrwa_dev0", "bgrwa_dev1", "bgrwa_dev2", "ed_N"});
    for (int i = 0; i < 3; ++i)
        CHECK(t.rows[0][7 + i] == doctest::Approx(std::abs(t.rows[0][1 + i] - t.rows[0][4 + i])).epsilon(1e-9));
}

TEST_CASE("csv and json round trip")
{
    RunConfig c;
    c.command = Command::Dynamics;
    c.g = "0.2";
    c.tmax = 5;
    c.samples = 11;
    const Table t = run(c);
    CHECK(table_from_csv(to_csv(t)) == t);
    CHECK(table_from_json(to_json(t)) == t);
}

TEST_CASE("output is independent of the thread count")
{
    const auto a = invoke({"compare", "--g", "0:0.6:0.1", "--jobs", "1", "--format", "json"});
    const auto b = invoke({"compare", "--g", "0:0.6:0.1", "--jobs", "4", "--format", "json"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("jobs") == std::string::npos);
}

TEST_CASE("config file values are overridden by flags")
{
    const std::string path = "qrabi_cli_test.ini";
    {
        std::ofstream f(path);
        f << "delta = 0.5\nepsilon = 0.25\ng = 0.3\nlevels = 2\nmethods = bgrwa\n";
    }
    const Run a = invoke({"spectrum", "--config", path});
    const Run b = invoke({"spectrum", "--config", path, "--delta", "0.7"});
    std::remove(path.c_str());
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out.find("# delta: 0.5\n") != std::string::npos);
    CHECK(b.out.find("# delta: 0.7\n") != std::string::npos);
    CHECK(b.out.find("# epsilon: 0.25\n") != std::string::npos);
}

TEST_CASE("configuration errors exit with 2")
{
    CHECK(invoke({"spectrum", "--omega", "0"}).code == 2);
    CHECK(invoke({"spectrum", "--g", "-0.1"}).code == 2);
    CHECK(invoke({"spectrum", "--methods", "rwa"}).code == 2);
    CHECK(invoke({"dynamics", "--g", "0:1:0.5"}).code == 2);
    CHECK(invoke({"dynamics", "--methods", "vvp"}).code == 2);
    CHECK(invoke({"flux-scan", "--methods", "vvp"}).code == 2);
    CHECK(invoke({"spectrum", "--vvp-l", "x"}).code == 2);
    CHECK(invoke({"nonsense"}).code == 2);
    CHECK(invoke({}).code == 2);
}

TEST_CASE("engine failures exit with 3")
{
    const Run r = invoke({"dynamics", "--g", "1.0", "--n-modes", "1", "--samples", "2"});
    CHECK(r.code == 3);
    CHECK(r.err.find("--n-modes") != std::string::npos);
}

TEST_CASE("help exits cleanly")
{
    const Run r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("flux-scan") != std::string::npos);
}

TEST_CASE("flux scan defaults to the device parameters")
{
    const Run r = invoke({"flux-scan", "--flux", "0.4995:0.5005:0.0005", "--methods", "bgrwa,ed"});
    REQUIRE(r.code == 0);
    const Table t = table_from_csv(r.out);
    CHECK(t.rows.size() == 3);
    CHECK(r.out.find("# g_ghz: 0.82") != std::string::npos);
    CHECK(t.columns.back() == "dev_T3");
}
