#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>
#include <json.hpp>

#include "starrad/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "starrad");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = starrad::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

struct TolGuard {
    explicit TolGuard(const char* v) { setenv("STARRAD_TOL", v, 1); }
    ~TolGuard() { unsetenv("STARRAD_TOL"); }
};

}  // namespace

TEST_CASE("parse_range")
{
    CHECK(starrad::cli::parse_range("0:0.75:4") == std::vector<double>{0.0, 0.25, 0.5, 0.75});
    CHECK(starrad::cli::parse_range("0.3") == std::vector<double>{0.3});
    CHECK_THROWS(starrad::cli::parse_range("0:1:0"));
    CHECK_THROWS(starrad::cli::parse_range("a:b:c"));
}

TEST_CASE("eval")
{
    const auto h = run_cli({"eval", "struve_H", "--nu", "0.5", "--z", "3.14159265358979", "--format", "json"});
    REQUIRE(h.code == 0);
    CHECK(json::parse(h.out).at("value").get<double>() == doctest::Approx(0.90031632).epsilon(1e-8));

    const auto p = run_cli({"eval", "phi0", "--mu", "0.5", "--z", "0", "--format", "json"});
    REQUIRE(p.code == 0);
    CHECK(json::parse(p.out).at("value").get<double>() == 1.0);

    CHECK(run_cli({"eval", "lommel_s", "--mu-raw", "0", "--nu-raw", "0.5", "--z", "-1"}).code == 2);
    CHECK(run_cli({"eval", "phi0", "--mu", "0.5", "--z", "1e4"}).code == 3);
    CHECK(run_cli({"eval", "nonsense", "--z", "1"}).code == 2);

    const auto e = run_cli({"eval", "lommel_s", "--mu-raw", "0", "--nu-raw", "0.5", "--z", "-1", "--format", "json"});
    const auto j = json::parse(e.out);
    CHECK(j.at("error").at("kind").get<std::string>() == "InvalidParameter");
}

TEST_CASE("radius")
{
    const auto g = run_cli({"radius", "--family", "g", "--mu", "0.5", "--alpha", "0", "--format", "json"});
    REQUIRE(g.code == 0);
    const auto j = json::parse(g.out);
    CHECK(j.at("radius").get<double>() == doctest::Approx(1.9444270525853908).epsilon(1e-12));
    CHECK(j.at("certified").get<bool>());
    CHECK(j.dump(2) + "\n" == g.out);

    const auto f = run_cli({"radius", "--family", "f", "--mu", "-0.75", "--alpha", "0", "--format", "json"});
    CHECK(json::parse(f.out).at("regime") == "imaginary_axis");

    const auto h = run_cli({"radius", "--family", "h", "--mu", "0.5", "--alpha", "0.25", "--format", "json"});
    const auto hj = json::parse(h.out);
    CHECK(hj.at("regime") == "sqrt_transformed");
    const double t = hj.at("equation_root").get<double>();
    CHECK(hj.at("radius").get<double>() == t * t);

    CHECK(run_cli({"radius", "--family", "g", "--mu", "0", "--alpha", "0"}).code == 2);
    CHECK(run_cli({"radius", "--family", "v", "--nu", "0.5", "--alpha", "0"}).code == 2);
    CHECK(run_cli({"radius", "--family", "v", "--nu", "0.5", "--alpha", "0", "--diagnostic"}).code == 0);
    CHECK(run_cli({"radius", "--family", "q", "--mu", "0.5"}).code == 2);
    CHECK(run_cli({"radius", "--family", "g", "--mu", "0.5", "--alpha", "1.5"}).code == 2);
}

TEST_CASE("radius reports uncertified results with exit 4")
{
    TolGuard tol("0.05");
    const auto r = run_cli({"radius", "--family", "g", "--mu", "0.5", "--alpha", "0.5"});
    CHECK(r.code == 4);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(r.out.find("radius = ") != std::string::npos);
}

TEST_CASE("single-cell table agrees with radius")
{
    const auto r = run_cli({"radius", "--family", "u", "--nu", "0.2", "--alpha", "0.5", "--format", "csv"});
    const auto t = run_cli({"table", "--family", "u", "--nu", "0.2:0.2:1", "--alpha", "0.5:0.5:1"});
    REQUIRE(r.code == 0);
    REQUIRE(t.code == 0);
    const auto rl = lines(r.out), tl = lines(t.out);
    REQUIRE(rl.size() == 2);
    REQUIRE(tl.size() == 2);
    CHECK(rl == tl);
}

TEST_CASE("table")
{
    const auto t = run_cli({"table", "--family", "u", "--nu", "-0.4:0.4:5", "--alpha", "0:0.75:4"});
    REQUIRE(t.code == 0);
    const auto l = lines(t.out);
    REQUIRE(l.size() == 21);
    CHECK(l[0] == "family,param,alpha,radius,equation_root,regime,residual,certified");
    for (std::size_t i = 1; i < l.size(); ++i) CHECK(l[i].substr(l[i].rfind(',')) == ",true");
    const auto manifest = json::parse(t.err);
    CHECK(manifest.at("rows").size() == 20);
    CHECK(manifest.at("csv_schema_version") == starrad::cli::csv_schema_version);

    const auto again = run_cli({"table", "--family", "u", "--nu", "-0.4:0.4:5", "--alpha", "0:0.75:4"});
    CHECK(again.out == t.out);
    auto m2 = json::parse(again.err);
    auto m1 = manifest;
    m1.erase("timestamp");
    m2.erase("timestamp");
    CHECK(m1 == m2);

    const auto z = run_cli({"table", "--family", "g", "--mu", "-0.5:0.5:3", "--alpha", "0:0:1"});
    CHECK(z.code == 0);
    const auto zl = lines(z.out);
    REQUIRE(zl.size() == 4);
    CHECK(zl[2].find("invalid") != std::string::npos);
    CHECK(zl[2].substr(zl[2].rfind(',')) == ",false");
    const auto zm = json::parse(z.err);
    CHECK(zm.at("rows").at(1).at("status") == "invalid");
    CHECK(zm.at("rows").at(1).contains("error"));

    CHECK(run_cli({"table", "--family", "u", "--nu", "x", "--alpha", "0:1:2"}).code == 2);
}

TEST_CASE("table writes a manifest sidecar")
{
    const auto dir = std::filesystem::temp_directory_path() / "starrad_cli_test";
    std::filesystem::create_directories(dir);
    const auto csv = (dir / "g.csv").string();
    const auto t = run_cli({"table", "--family", "g", "--mu", "0.5:0.5:1", "--alpha", "0:0.5:2", "--output", csv});
    REQUIRE(t.code == 0);
    std::ifstream data(csv), side(csv + ".manifest.json");
    REQUIRE(data.good());
    REQUIRE(side.good());
    const auto m = json::parse(side);
    CHECK(m.at("tool") == "starrad");
    CHECK(m.at("version") == starrad::cli::tool_version);
    CHECK(m.contains("tolerances"));
    CHECK(m.contains("command_line"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("zeros")
{
    const auto z = run_cli({"zeros", "--function", "phi0", "--mu", "0.5", "--count", "3", "--format", "json"});
    REQUIRE(z.code == 0);
    const auto j = json::parse(z.out);
    REQUIRE(j.at("zeros").size() == 3);
    for (const auto& e : j.at("zeros")) CHECK(e.at("in_bound") == true);

    const auto s = run_cli({"zeros", "--function", "struve-H", "--nu", "0.25", "--count", "1", "--format", "json"});
    REQUIRE(s.code == 0);
    CHECK(json::parse(s.out).at("zeros").at(0).at("zero").get<double>() > 1.0);

    CHECK(run_cli({"zeros", "--function", "phi0", "--mu", "0.5", "--count", "0"}).code == 2);
    // double zeros of 1 - cos z cannot be bracketed by sign changes
    CHECK(run_cli({"zeros", "--function", "struve-H", "--nu", "0.5", "--count", "1"}).code == 3);
}

TEST_CASE("verify")
{
    const auto b = run_cli({"verify", "--suite", "bounds"});
    CHECK(b.code == 0);
    CHECK(b.out.find("FAIL") == std::string::npos);
    CHECK(run_cli({"verify", "--suite", "nope"}).code == 2);

    TolGuard tol("1e-4");
    const auto s = run_cli({"verify", "--suite", "series"});
    CHECK(s.code == 5);
    CHECK(s.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors, help and version")
{
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
    const auto v = run_cli({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find(starrad::cli::tool_version) != std::string::npos);
    {
        TolGuard tol("abc");
        CHECK(run_cli({"eval", "phi0", "--mu", "0.5", "--z", "1"}).code == 2);
    }
}
