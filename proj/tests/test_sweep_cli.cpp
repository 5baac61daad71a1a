#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewent/cli.hpp"
#include "skewent/sweep.hpp"

using namespace skewent;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "skewent");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

const std::string kHalfPi = "1.5707963267948966";

}  // namespace

TEST_CASE("format_double uses 17 significant digits") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("2x2 sweep over the corners") {
    const Run r = cli({"sweep", "--n-steps", "2", "--theta-steps", "2", "--theta-max", kHalfPi, "--phi", "0"});
    REQUIRE(r.code == kExitOk);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == std::vector<std::string>{"n", "theta", "phi", "skew_closed", "skew_numeric", "mixedness",
                                              "negativity_closed", "negativity_numeric", "abs_diff"});
    for (std::size_t i = 1; i < rows.size(); ++i) REQUIRE(rows[i].size() == 9);

    // Rows in (n, theta) order: (0,0), (0,pi/2), (1,0), (1,pi/2).
    for (std::size_t i : {1u, 2u}) {
        CHECK(rows[i][0] == "0");
        CHECK(std::stod(rows[i][5]) == doctest::Approx(0.5));
        CHECK(std::stod(rows[i][6]) == 0.0);
        CHECK(std::stod(rows[i][7]) == 0.0);
    }
    CHECK(rows[4][0] == "1");
    CHECK(rows[4][1] == kHalfPi);
    CHECK(std::stod(rows[4][6]) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::stod(rows[4][7]) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("default sweep passes and is deterministic") {
    const Run a = cli({"sweep"});
    const Run b = cli({"sweep"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(parse_csv(a.out).size() == 1 + 11 * 13 * 3);

    const SweepResult result = run_sweep(SweepConfig{});
    CHECK(result.max_abs_diff <= 1e-9);
    CHECK(result.points.size() == 11 * 13 * 3);
    CHECK(result.points.back().n == 1.0);
    CHECK(result.points.back().theta == std::numbers::pi);
}

TEST_CASE("sweep writes to a file") {
    const auto path = std::filesystem::temp_directory_path() / "skewent_test_sweep.csv";
    const Run r = cli({"sweep", "--n-steps", "3", "--theta-steps", "3", "--out", path.string()});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == cli({"sweep", "--n-steps", "3", "--theta-steps", "3"}).out);
    std::filesystem::remove(path);
}

TEST_CASE("sweep JSON output") {
    const Run r = cli({"sweep", "--n-steps", "2", "--theta-steps", "3", "--phi", "0", "--phi", "1", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["passed"] == true);
    CHECK(doc["tolerance"].get<double>() == 1e-9);
    REQUIRE(doc["rows"].size() == 12);
    CHECK(doc["rows"][0].contains("negativity_numeric"));
}

TEST_CASE("sweep exit codes") {
    CHECK(cli({"sweep", "--tol", "1e-300"}).code == kExitFailure);
    CHECK(cli({"sweep", "--n-steps", "1"}).code == kExitUsage);
    CHECK(cli({"sweep", "--tol", "0"}).code == kExitUsage);
    CHECK(cli({"sweep", "--phi", "7"}).code == kExitUsage);
    CHECK(cli({"sweep", "--format", "xml"}).code == kExitUsage);
    CHECK(cli({"sweep", "--n-steps", "abc"}).code == kExitUsage);
    CHECK(cli({"sweep", "--out", "/nonexistent-dir/x.csv"}).code == kExitUsage);
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"bogus"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("demo reports") {
    const Run maximal = cli({"demo", "--n", "1", "--theta", kHalfPi, "--phi", "0"});
    CHECK(maximal.code == kExitOk);
    CHECK(maximal.out.find("maximally entangled") != std::string::npos);
    CHECK(maximal.out.find("holds") != std::string::npos);

    const Run mixed = cli({"demo", "--n", "0", "--theta", "1"});
    CHECK(mixed.code == kExitOk);
    CHECK(mixed.out.find("zero entanglement") != std::string::npos);

    const Run half = cli({"demo", "--n", "0.5", "--theta", kHalfPi});
    CHECK(half.code == kExitOk);
    CHECK(half.out.find("trace norm       0.25\n") != std::string::npos);
    CHECK(half.out.find("closed form      0.25 ") != std::string::npos);

    CHECK(cli({"demo", "--n", "1.5", "--theta", "1"}).code == kExitUsage);
    CHECK(cli({"demo", "--n", "0.5", "--theta", "4"}).code == kExitUsage);
    CHECK(cli({"demo", "--theta", "1"}).code == kExitUsage);
}

TEST_CASE("verify") {
    const Run a = cli({"verify", "--cases", "1"});
    const Run b = cli({"verify", "--cases", "1"});
    CHECK(a.out == b.out);
    CHECK(a.out.find("linalg.eig_reconstruction") != std::string::npos);

    const Run tiny = cli({"verify", "--cases", "1", "--tol", "1e-20"});
    CHECK(tiny.code == kExitFailure);
    CHECK(cli({"verify", "--cases", "0"}).code == kExitUsage);
    CHECK(cli({"verify", "--tol", "-1"}).code == kExitUsage);
}
