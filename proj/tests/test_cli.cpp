#include "doctest.h"

#include "wgreedy/cli.hpp"
#include "wgreedy/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace wgreedy;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream o, e;
    const int code = run_cli(args, o, e);
    return {code, o.str(), e.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("wgreedy_cli_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void put(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

TEST_CASE("tga-run on a small l1 vector") {
    const fs::path d = scratch("tga");
    put(d / "v.json", R"({"entries": [["1", 3], ["2", 2], ["3", 1]]})");
    const Run r = cli({"tga-run", "--space", "l1", "--weight", "card", "--input", (d / "v.json").string(), "--m", "1",
                       "--out", d.string()});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(slurp(d / "tga-run.json"));
    CHECK(j["oracles_on_greedy_set"]["sigma_m"]["value"] == 3.0);
    CHECK(j["oracles_on_greedy_set"]["sigma_tilde_m"]["value"] == 3.0);
    CHECK(j["branches"][0]["greedy_residual"] == 3.0);
    CHECK(j["branches"][0]["chebyshev"]["residual_norm"] == 3.0);
    CHECK(j["invocation"].get<std::string>().starts_with("wgreedy tga-run"));
    CHECK(j["seed"] == 0);
}

TEST_CASE("tga-run with m = 0 reports the norm everywhere") {
    const fs::path d = scratch("tga0");
    put(d / "v.json", R"({"entries": [["1", 3], ["2", -2], ["5", 1]]})");
    REQUIRE(cli({"tga-run", "--space", "l2", "--input", (d / "v.json").string(), "--m", "0", "--out", d.string()}).code == 0);
    const Json j = Json::parse(slurp(d / "tga-run.json"));
    const double norm = j["norm"].get<double>();
    for (const auto& [k, v] : j["oracles_on_greedy_set"].items()) CHECK(v["value"].get<double>() == norm);
    CHECK(j["branches"][0]["greedy_residual"].get<double>() == norm);
}

TEST_CASE("tga-run lists every tie branch") {
    const fs::path d = scratch("tgaall");
    put(d / "v.json", R"({"entries": [["1", 1], ["2", 1], ["3", 1], ["4", 1]]})");
    REQUIRE(cli({"tga-run", "--input", (d / "v.json").string(), "--m", "2", "--all-greedy-sets", "--out", d.string()})
                .code == 0);
    CHECK(Json::parse(slurp(d / "tga-run.json"))["branches"].size() == 6);
}

TEST_CASE("tga-run input errors") {
    const fs::path d = scratch("tgabad");
    put(d / "bad.json", R"({"entries": [["2", 1], ["1", 1]]})");
    put(d / "v.json", R"({"entries": [["1", 1]]})");
    Run r = cli({"tga-run", "--input", (d / "bad.json").string(), "--m", "1", "--out", d.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("strictly increasing") != std::string::npos);
    CHECK(cli({"tga-run", "--input", (d / "missing.json").string(), "--m", "1"}).code == 2);
    CHECK(cli({"tga-run", "--input", (d / "v.json").string(), "--m", "-1", "--out", d.string()}).code == 2);
    CHECK(cli({"tga-run", "--input", (d / "v.json").string()}).code == 2);
}

TEST_CASE("unknown names list the catalog") {
    Run r = cli({"constants", "--space", "l0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("catalog") != std::string::npos);
    CHECK(r.err.find("m3") != std::string::npos);
    r = cli({"check", "--suite", "nope", "--space", "l1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("greedy-characterization") != std::string::npos);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
}

TEST_CASE("constants on l1 are certified 1") {
    const fs::path d = scratch("const");
    REQUIRE(cli({"constants", "--space", "l1", "--weight", "card", "--dim", "6", "--family-size", "20", "--out", d.string()})
                .code == 0);
    const Json j = Json::parse(slurp(d / "constants.json"));
    REQUIRE(j["estimates"].size() == 16);
    for (const auto& e : j["estimates"]) {
        INFO(e["name"]);
        CHECK(e["certified"]["value"].get<double>() == (e["name"] == "C_s_omega" ? 5.0 : 1.0));
        CHECK(e["lower_bound"].get<double>() <= e["certified"]["value"].get<double>() + 1e-12);
    }
    const std::string csv = slurp(d / "constants.csv");
    CHECK(csv.starts_with("# wgreedy constants"));
}

TEST_CASE("constants on the counterexample space with cardinality weight") {
    const fs::path d = scratch("constm3");
    REQUIRE(cli({"constants", "--space", "m3", "--weight", "card", "--dim", "16", "--out", d.string()}).code == 0);
    const Json j = Json::parse(slurp(d / "constants.json"));
    for (const auto& e : j["estimates"])
        if (e["name"] == "C_d_disjoint") CHECK(e["lower_bound"].get<double>() == doctest::Approx(1.97117089881628));
}

TEST_CASE("check exit codes") {
    const fs::path d = scratch("check");
    CHECK(cli({"check", "--suite", "m1", "--space", "l1", "--weight", "card", "--vectors", "8", "--out", d.string()}).code == 0);
    const Json j = Json::parse(slurp(d / "check.json"));
    CHECK(j["ok"] == true);
    CHECK(j["reports"][0]["suite"] == "greedy-characterization");
    // premise not met: skipped, still exit 0
    const Run r = cli({"check", "--suite", "p42", "--space", "l1", "--weight", "seq:geom:0.5", "--out", d.string()});
    CHECK(r.code == 0);
    CHECK(Json::parse(slurp(d / "check.json"))["reports"][0]["status"] == "skipped");
    // missing certified constants: aborted counts as failure
    CHECK(cli({"check", "--suite", "m1", "--space", "m3", "--weight", "card", "--out", d.string()}).code == 1);
    CHECK(cli({"check", "--suite", "m1", "--out", d.string()}).code == 2);
}

TEST_CASE("counterexample check writes table and plot") {
    const fs::path d = scratch("cx");
    REQUIRE(cli({"check", "--suite", "m3-counterexample", "--n-list", "4,16,64,100", "--out", d.string()}).code == 0);
    CHECK(fs::exists(d / "counterexample.svg"));
    const Json j = Json::parse(slurp(d / "check.json"));
    CHECK(j["reports"][0]["tables"][0]["rows"].size() == 4);
    CHECK(cli({"check", "--suite", "m3", "--n-list", "4,x", "--out", d.string()}).code == 2);
}

TEST_CASE("plot-democracy") {
    const fs::path d = scratch("plot");
    REQUIRE(cli({"plot-democracy", "--n-max", "100", "--out", d.string()}).code == 0);
    std::istringstream csv(slurp(d / "democracy.csv"));
    std::vector<std::string> rows;
    for (std::string line; std::getline(csv, line);)
        if (!line.empty() && line[0] != '#' && line.rfind("N,", 0) != 0) rows.push_back(line);
    REQUIRE(rows.size() == 99);
    CHECK(rows.front().starts_with("2,"));
    CHECK(std::stod(rows.back().substr(rows.back().find(',') + 1)) == doctest::Approx(3.58362269982672).epsilon(1e-13));
    const std::string svg = slurp(d / "democracy.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("wgreedy plot-democracy") != std::string::npos);
    CHECK(cli({"plot-democracy", "--n-max", "1"}).code == 2);
    REQUIRE(cli({"plot-democracy", "--n-max", "4", "--out", d.string()}).code == 0);
    CHECK(slurp(d / "democracy.csv").find("\n4,1.33653938418056") != std::string::npos);
}

TEST_CASE("outputs do not depend on the worker count") {
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    const fs::path out = fs::temp_directory_path() / "wgreedy_cli_test_det_out";
    std::vector<std::string> files;
    for (const char* workers : {"1", "4"}) {
        fs::remove_all(out);
        REQUIRE(cli({"--workers", workers, "check", "--suite", "all", "--space", "m3", "--weight", "norm:m3", "--vectors",
                     "6", "--tuples", "60", "--seed", "5", "--out", out.string()})
                    .code == 0);
        files.push_back(slurp(out / "check.json"));
    }
    CHECK(files[0] == files[1]);
    CHECK(files[0].find("--workers") == std::string::npos);
}
