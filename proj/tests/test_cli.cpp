#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "crossnum/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "crossnum");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = crossnum::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text) n += c == '\n';
    return n;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("count") {
    auto r = run({"count", "--r", "2", "--d", "3"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["count"] == "7");

    r = run({"count", "--r", "10", "--d", "2", "--brute"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["count"] == "69");
    CHECK(j["brute"] == "69");
    CHECK(j["match"] == true);

    CHECK(run({"count", "--r", "0", "--d", "2"}).code == 2);
    CHECK(run({"count", "--r", "5"}).code == 2);
    CHECK(run({"count", "--r", "abc", "--d", "2"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"count", "--r", "100000000", "--d", "3", "--brute"}).code == 4);

    r = run({"count", "--r", "100000000", "--d", "12"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["count"].is_string());
}

TEST_CASE("spectrum") {
    auto r = run({"spectrum", "--kind", "sharp", "--d", "2", "--s", "1", "--n", "6"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["a_n"].get<double>() == doctest::Approx(1.0 / 3.0));
    CHECK(j["r"] == 3);

    r = run({"spectrum", "--kind", "sharp", "--d", "5", "--s", "2", "--n", "11"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["a_n"].get<double>() == 0.25);
    CHECK(j["r"] == 2);

    r = run({"spectrum", "--kind", "plus", "--d", "2", "--s", "1", "--nmax", "5"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    REQUIRE(j["sigma"].size() == 5);
    CHECK(j["sigma"][0] == 1.0);

    r = run({"spectrum", "--kind", "plus", "--d", "2", "--s", "1", "--nmax", "5", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(count_lines(r.out) == 6);
    CHECK(r.out.rfind("n,sigma\n1,1\n", 0) == 0);

    r = run({"spectrum", "--kind", "intm", "--d", "2", "--m", "2", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(run({"spectrum", "--kind", "intm", "--d", "2", "--s", "1", "--m", "2", "--n", "3"}).code == 2);
    CHECK(run({"spectrum", "--kind", "plus", "--d", "2", "--s", "1"}).code == 2);
    CHECK(run({"spectrum", "--kind", "plus", "--d", "4", "--s", "1", "--nmax", "1000000", "--max-enum", "1000"}).code == 4);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--formula", "sharp-upper-43", "--d", "2", "--s", "1"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["grid"]["points_checked"].get<int>() > 0);

    r = run({"verify", "--formula", "pre-upper-46", "--d", "8", "--s", "0.5"});
    CHECK(r.code == 0);

    r = run({"verify", "--formula", "qpt", "--s", "1", "--t", "0.01", "--Ct", "1"});
    CHECK(r.code == 3);
    j = json::parse(r.out);
    CHECK(j["pass"] == false);
    CHECK_FALSE(j["violations"].empty());

    r = run({"verify", "--formula", "qpt", "--s", "1"});
    CHECK(r.code == 0);

    r = run({"verify", "--from", "plus", "--to", "sharp", "--s", "2", "--s-to", "1", "--d", "2", "--radius", "20"});
    CHECK(r.code == 0);
    r = run({"verify", "--from", "star", "--to", "sharp", "--s", "2", "--d", "2", "--radius", "5"});
    CHECK(r.code == 2);

    CHECK(run({"verify", "--formula", "nope", "--d", "2", "--s", "1"}).code == 2);
}

TEST_CASE("tract") {
    auto r = run({"tract", "--kind", "sharp", "--s", "1", "--d", "2", "--eps", "0.3333334"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["n"] == "6");

    r = run({"tract", "--kind", "plus", "--s", "1", "--d", "2", "--eps", "0.5", "--exact"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.contains("lower"));
    CHECK(j.contains("upper"));
    CHECK(j.contains("n"));

    r = run({"tract", "--kind", "sharp", "--s", "1", "--d", "1,2,3", "--eps", "0.5,0.1", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(count_lines(r.out) == 7);
    CHECK(run({"tract", "--kind", "sharp", "--s", "1", "--d", "2", "--eps", "1.5"}).code == 2);
}

TEST_CASE("cross and trace write files") {
    const auto dir = std::filesystem::temp_directory_path() / "crossnum_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "cross.csv").string();
    std::filesystem::remove(path);
    auto r = run({"cross", "--r", "2", "--d", "2", "--out", path});
    REQUIRE(r.code == 0);
    const auto text = slurp(path);
    CHECK(count_lines(text) == 6);
    CHECK(text.rfind("k1,k2,product\n", 0) == 0);

    const auto bad = (dir / "bad.csv").string();
    std::filesystem::remove(bad);
    CHECK(run({"cross", "--r", "0", "--d", "2", "--out", bad}).code == 2);
    CHECK_FALSE(std::filesystem::exists(bad));

    r = run({"trace", "--d", "2", "--s", "1", "--rs", "100,1000,10000"});
    REQUIRE(r.code == 0);
    CHECK(count_lines(r.out) == 4);
    std::istringstream rows(r.out);
    std::string line;
    std::getline(rows, line);
    CHECK(line == "n,ratio,constant");
    while (std::getline(rows, line)) CHECK(line.substr(line.rfind(',') + 1) == "4");

    r = run({"cross", "--dyadic", "2", "--d", "2", "--format", "json"});
    CHECK(r.code == 0);
}

TEST_CASE("byte-stable output") {
    const std::vector<std::string> args{"spectrum", "--kind", "star", "--d", "3", "--s", "0.7", "--nmax", "300", "--indices"};
    CHECK(run(args).out == run(args).out);
}

#ifdef CROSSNUM_BIN
TEST_CASE("installed binary exit codes") {
    const std::string bin = CROSSNUM_BIN;
    auto status = [&](const std::string& args) {
        const int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status("count --r 2 --d 3") == 0);
    CHECK(status("count --r 0 --d 2") == 2);
    CHECK(status("verify --formula qpt --s 1 --t 0.01 --Ct 1") == 3);
}
#endif
