#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "words123/json_io.hpp"

using namespace words123;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "words123");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
    auto r = run({"count", "--list", "2,2,2", "--verify"});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["exactly_one_123"] == "12");
    CHECK(j["verified"] == true);

    r = run({"count", "--list", "1,1", "--format", "plain"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("0\n", 0) == 0);
    r = run({"count", "--list", "1,1,1,1", "--format", "plain"});
    CHECK(r.out.rfind("6\n", 0) == 0);

    CHECK(run({"count", "--list", "1,x"}).code == 2);
    CHECK(run({"count", "--list", "1, 2"}).code == 2);
    CHECK(run({"count", "--list", "3,3,3,4", "--verify"}).code == 2);
    CHECK(run({"count", "--list", "3,3,3,3", "--verify"}).code == 0);
    CHECK(run({"count"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("count with a cache file") {
    const auto dir = std::filesystem::temp_directory_path() / "words123_cli_test";
    std::filesystem::create_directories(dir);
    const auto cache = (dir / "cache.jsonl").string();
    std::filesystem::remove(cache);
    CHECK(run({"count", "--list", "2,3,2", "--cache", cache}).code == 0);
    CHECK(std::filesystem::file_size(cache) > 0);
    const auto second = run({"count", "--list", "2,3,2", "--cache", cache});
    CHECK(second.code == 0);
    CHECK(Json::parse(second.out)["exactly_one_123"] == Json::parse(run({"count", "--list", "2,3,2"}).out)["exactly_one_123"]);
    std::ofstream(cache) << "{\"list\":[2,1],\"count\":3}\n";
    const auto bad = run({"count", "--list", "2,2", "--cache", cache});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 1") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("series") {
    auto r = run({"series", "--r", "2", "--terms", "6"});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["coeffs"] == Json::array({"0", "0", "0", "12", "174", "2064"}));
    CHECK(j["kind"] == "f");
    CHECK(run({"series", "--r", "1", "--terms", "6", "--format", "plain"}).out == "0,0,0,1,6,27\n");
    const auto csv = run({"series", "--r", "1", "--terms", "4", "--format", "csv"}).out;
    CHECK(csv == "n,coefficient\n0,0\n1,0\n2,0\n3,1\n");
    r = run({"series", "--r", "2", "--terms", "0"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["coeffs"].empty());
    CHECK(run({"series", "--r", "0", "--terms", "5"}).code == 2);
    CHECK(run({"series", "--r", "2", "--terms", "-1"}).code == 2);
    CHECK(run({"series", "--r", "2", "--terms", "5", "--format", "xml"}).code == 2);
    CHECK(run({"series", "--r", "3", "--terms", "20"}).out == run({"series", "--r", "3", "--terms", "20"}).out);
}

TEST_CASE("guess-alg") {
    auto r = run({"guess-alg", "--r", "2", "--terms", "80", "--degx", "6", "--degy", "4", "--compare-fixture"});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["fixture_match"] == true);
    CHECK(j["verification"]["residual_zero"] == true);
    CHECK(polynomial_from_json(j["polynomial"]) == fixture_algebraic_r2().normalized());

    r = run({"guess-alg", "--r", "2", "--terms", "10"});
    CHECK(r.code == 2);
    CHECK(r.err.find("insufficient terms") != std::string::npos);
    CHECK(run({"guess-alg", "--r", "2", "--terms", "40", "--degx", "1", "--degy", "1"}).code == 3);
    CHECK(run({"guess-alg", "--r", "1", "--terms", "40", "--compare-fixture"}).code == 2);
}

TEST_CASE("guess-rec") {
    auto r = run({"guess-rec", "--r", "1", "--terms", "40", "--compare-fixture"});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["fixture_match"] == true);
    CHECK(operator_from_json(j["operator"]) == fixture_recurrence(1).normalized());

    CHECK(run({"guess-rec", "--r", "2", "--terms", "40", "--max-order", "1", "--max-degree", "2"}).code == 3);
    CHECK(run({"guess-rec", "--r", "2", "--terms", "20"}).code == 2);
    r = run({"guess-rec", "--r", "2", "--terms", "90", "--compare-fixture"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["fixture_match"] == true);
    CHECK(Json::parse(r.out)["operator"]["order"] == 4);
}

TEST_CASE("asymptotics") {
    auto r = run({"asymptotics", "--r", "2", "--nmax", "300"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["mu"]["pass"] == true);
    CHECK(j["C"]["pass"] == true);
    CHECK(std::abs(j["mu"]["estimate"].get<double>() - 12) < 12e-3);

    r = run({"asymptotics", "--r", "1", "--nmax", "100"});
    CHECK(r.code == 0);
    j = Json::parse(r.out);
    CHECK(std::abs(j["alpha"]["estimate"].get<double>() + 1.5) < 0.05);

    r = run({"asymptotics", "--r", "3", "--nmax", "300", "--format", "plain"});
    CHECK(r.code == 0);
    CHECK(r.out.find("guessed") != std::string::npos);

    CHECK(run({"asymptotics", "--r", "2", "--nmax", "10"}).code == 2);
}

TEST_CASE("selftest on a subset") {
    const auto r = run({"selftest", "--only", "1,4,8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS]  1") != std::string::npos);
    CHECK(r.out.find("[PASS]  8") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
}
