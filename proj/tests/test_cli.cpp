#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kf/cli.hpp"
#include "kf/json_io.hpp"

using namespace kf;
using io::json;

namespace {

struct Run {
    int code;
    std::string out;
    json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "kf");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str()};
}

std::string tmp_path(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "kf_cli_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Writes the command's output to a file and runs verify on it.
int round_trip(std::vector<std::string> args, const std::string& name) {
    std::string path = tmp_path(name);
    args.insert(args.begin(), {"-o", path});
    auto r = run(args);
    REQUIRE(r.code == kExitOk);
    auto v = run({"verify", path});
    INFO(v.out);
    return v.code;
}

}  // namespace

TEST_CASE("cli examples") {
    auto r = run({"verify-identities", "--family", "general", "--k", "2", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.j()["verified"] == true);

    r = run({"torsion", "--curve", R"({"A":"0","B":"1"})", "--point", R"(["2","3"])"});
    CHECK(r.code == 0);
    CHECK(r.j()["verdict"] == "torsion");
    CHECK(r.j()["order"] == 6);

    r = run({"twist-pairs", "--count", "1", "--height", "5"});
    CHECK(r.code == 0);
    auto w = r.j()["witnesses"][0];
    CHECK(w["l"] == "-9");
    CHECK(w["point1"] == json::array({"-2", "1"}));
    CHECK(w["point2"] == json::array({"-2", "1"}));

    r = run({"density-pencil", "--a", "1", "--c", "1", "--d", "1", "--t1", "1", "--eps", "1/10"});
    CHECK(r.code == 0);
    CHECK(r.j()["t_prime"] == "671/625");
    CHECK(r.j()["u"] == "5/6");
    CHECK(r.j()["error"] == "46/625");
}

TEST_CASE("every output re-verifies") {
    CHECK(round_trip({"verify-identities", "--family", "sextic"}, "ident.json") == 0);
    CHECK(round_trip({"eval-param", "--family", "general", "--a", "1", "--b", "1", "--c", "2", "--d", "3", "--u", "2/3"},
                     "eval.json") == 0);
    CHECK(round_trip({"surface-contains", "--point", R"(["-2","1","-2"])"}, "contains.json") == 0);
    CHECK(round_trip({"fiber", "--t", "-2"}, "fiber_t.json") == 0);
    CHECK(round_trip({"fiber", "--y", "1"}, "fiber_y.json") == 0);
    CHECK(round_trip({"census", "--a", "-4", "--b", "0", "--c", "0", "--d", "1", "--t", "0"}, "census.json") == 0);
    CHECK(round_trip({"torsion", "--curve", R"({"A":0,"B":-2})", "--point", "[3,5]"}, "torsion.json") == 0);
    CHECK(round_trip({"chord-walk", "--curve", R"({"A":"0","B":"-2"})", "--point", R"(["3","5"])", "--steps", "-3"},
                     "walk.json") == 0);
    CHECK(round_trip({"twist-pairs", "--count", "5", "--height", "20"}, "twists.json") == 0);
    CHECK(round_trip({"density-pencil", "--family", "sextic", "--b", "1", "--c", "1", "--d", "1", "--t1", "0", "--eps",
                      "1/2"},
                     "pencil.json") == 0);
    CHECK(round_trip({"density-kummer", "--seed", R"(["-2","1","-2"])", "--t1", "0", "--eps", "1"}, "kummer.json") == 0);
}

TEST_CASE("tampered files fail verification") {
    std::string path = tmp_path("tamper.json");
    REQUIRE(run({"-o", path, "density-pencil", "--a", "1", "--c", "1", "--d", "1", "--t1", "1", "--eps", "1/10"}).code == 0);
    std::string text = slurp(path);

    auto rewrite = [&](const std::string& from, const std::string& to) {
        std::string t = text;
        auto pos = t.find(from);
        REQUIRE(pos != std::string::npos);
        t.replace(pos, from.size(), to);
        std::ofstream(path, std::ios::binary) << t;
        return run({"verify", path});
    };
    auto v = rewrite("\"671/625\"", "\"672/625\"");
    CHECK(v.code == kExitError);
    CHECK(v.j()["verified"] == false);
    // Same content, different layout: not byte-identical.
    v = rewrite("\"error\": \"46/625\"", "\"error\":\"46/625\"");
    CHECK(v.code == kExitError);
    v = rewrite("\"f_nonnegative\": true", "\"f_nonnegative\": false");
    CHECK(v.code == kExitError);
    v = rewrite("\"kind\"", "\"kind\"");  // untouched file
    CHECK(v.code == kExitOk);
}

TEST_CASE("errors and exit codes") {
    auto r = run({"torsion", "--curve", R"({"A":"0","B":"1"})", "--point", R"(["2","4"])"});
    CHECK(r.code == kExitError);
    CHECK(r.j()["error"] == "not-on-curve");

    r = run({"eval-param", "--family", "quartic", "--a", "1", "--c", "1", "--d", "1", "--u", "1/0"});
    CHECK(r.code == kExitError);
    CHECK(r.j()["error"] == "parse");

    r = run({"eval-param", "--family", "general", "--a", "1", "--b", "1", "--c", "2", "--d", "3", "--u", "0"});
    CHECK(r.code == kExitError);
    CHECK(r.j()["error"] == "pole");

    r = run({"no-such-command"});
    CHECK(r.code == kExitError);
    CHECK(r.j().contains("error"));

    r = run({"torsion", "--curve", "{", "--point", "[0,0]"});
    CHECK(r.code == kExitError);

    r = run({"verify", tmp_path("does-not-exist.json")});
    CHECK(r.code == kExitError);

    r = run({"density-kummer", "--seed", R"(["0","1","0"])", "--t1", "0", "--eps", "1"});
    CHECK(r.code == kExitError);

    r = run({"density-kummer", "--seed", R"(["-2","1","-2"])", "--t1", "5", "--eps", "1/1000000000000", "--steps", "4"});
    CHECK(r.code == kExitInconclusive);
    CHECK(r.j()["inconclusive"] == true);

    r = run({"density-pencil", "--family", "sextic", "--b", "1", "--c", "1", "--d", "1", "--t1", "0", "--eps", "1/2",
             "--retries", "1"});
    CHECK(r.code == kExitError);
    CHECK(r.j()["error"] == "cap-exceeded");

    r = run({"twist-pairs", "--count", "50", "--height", "3"});
    CHECK(r.code == kExitInconclusive);
    CHECK(r.j()["shortfall"] == true);

    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("output is deterministic and plot data is CSV") {
    std::vector<std::string> args{"census", "--y", "1"};
    CHECK(run(args).out == run(args).out);
    std::string csv = tmp_path("plot.csv");
    auto r = run({"chord-walk", "--curve", R"({"A":"0","B":"-2"})", "--point", "[3,5]", "--steps", "4", "--plot-data", csv});
    CHECK(r.code == 0);
    std::string text = slurp(csv);
    CHECK(text.rfind("n,x,y\n0,3,5\n", 0) == 0);
    csv = tmp_path("census.csv");
    r = run({"census", "--a", "-4", "--b", "0", "--c", "0", "--d", "1", "--t", "0", "--plot-data", csv, "--grid", "4"});
    CHECK(r.code == 0);
    CHECK(slurp(csv).rfind("x,s\n", 0) == 0);
}
