#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rcdb/commands.hpp"

using namespace rcdb;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    auto dir = fs::temp_directory_path() / "rcdb_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
    return p.string();
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kSmallConfig = R"({
  "d": 2, "t": 20, "runs": 2, "base_seed": 3,
  "action_set": {"kind": "basis"},
  "policies": [{"kind": "rcdb", "name": "rcdb", "c_bar": 0}],
  "attack": {"kind": "none", "budget": 0}
})";

}  // namespace

TEST_CASE("format_number uses 6 significant digits") {
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.123456789) == "0.123457");
    CHECK(format_number(1234567.0) == "1.23457e+06");
}

TEST_CASE("parse_budgets") {
    CHECK(parse_budgets("20,40,60") == std::vector<int>{20, 40, 60});
    CHECK_THROWS_AS(parse_budgets("40,20"), ConfigError);
    CHECK_THROWS_AS(parse_budgets("a,b"), ConfigError);
    CHECK_THROWS_AS(parse_budgets(""), ConfigError);
}

TEST_CASE("config defaults mirror the standard protocol") {
    RunConfig cfg = parse_config_text("{}");
    CHECK(cfg.d == 5);
    CHECK(cfg.T == 2000);
    CHECK(cfg.B == doctest::Approx(2.0));
    CHECK(cfg.runs == 10);
    CHECK(cfg.delta == doctest::Approx(0.05));
    CHECK(cfg.attack.budget == 45);
    CHECK(cfg.attack.p == doctest::Approx(0.5));
    CHECK(cfg.link.kind == LinkKind::Sigmoid);
    CHECK(cfg.action_set.kind == ActionSetKind::Hypercube);
    CHECK(cfg.policies.size() == 1);
    CHECK(cfg.policies[0].c_bar == 45);
}

TEST_CASE("config rejects unknown keys and bad values") {
    CHECK_THROWS_AS(parse_config_text(R"({"tt": 5})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"attack": {"kind": "nuke"}})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"policies": []})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"t": 10, "attack": {"budget": 11}})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("{not json"), ConfigError);
}

TEST_CASE("cmd_run writes header plus T rows") {
    auto dir = temp_dir();
    auto cfg_path = write_file(dir / "run.json", kSmallConfig);
    auto out_path = (dir / "run.csv").string();
    CHECK(cmd_run(cfg_path, out_path, std::nullopt, true) == 0);
    std::istringstream lines(read_file(out_path));
    std::string line;
    int n = 0;
    std::getline(lines, line);
    CHECK(line ==
          "round,instant_regret,cum_regret_mean,cum_regret_std,flips_used_mean,weight_mean");
    while (std::getline(lines, line)) ++n;
    CHECK(n == 20);
    CHECK(fs::exists(out_path + ".config.json"));
}

TEST_CASE("cmd_run output is byte identical across invocations") {
    auto dir = temp_dir();
    auto cfg_path = write_file(dir / "repeat.json", kSmallConfig);
    auto out1 = (dir / "r1.csv").string();
    auto out2 = (dir / "r2.csv").string();
    CHECK(cmd_run(cfg_path, out1, std::nullopt, true) == 0);
    CHECK(cmd_run(cfg_path, out2, std::nullopt, true) == 0);
    CHECK(read_file(out1) == read_file(out2));
}

TEST_CASE("resolved sidecar reproduces the run") {
    auto dir = temp_dir();
    auto cfg_path = write_file(dir / "orig.json", kSmallConfig);
    auto out1 = (dir / "o1.csv").string();
    CHECK(cmd_run(cfg_path, out1, std::nullopt, true) == 0);
    auto out2 = (dir / "o2.csv").string();
    CHECK(cmd_run(out1 + ".config.json", out2, std::nullopt, true) == 0);
    CHECK(read_file(out1) == read_file(out2));
}

TEST_CASE("malformed config exits 1 without output") {
    auto dir = temp_dir();
    auto cfg_path = write_file(dir / "bad.json", "{broken");
    auto out_path = (dir / "bad.csv").string();
    fs::remove(out_path);
    CHECK(cmd_run(cfg_path, out_path, std::nullopt, true) == 1);
    CHECK(!fs::exists(out_path));
}

TEST_CASE("T = 1 config yields one data row") {
    auto dir = temp_dir();
    auto cfg_path = write_file(dir / "t1.json", R"({
      "d": 2, "t": 1, "runs": 1, "action_set": {"kind": "basis"},
      "policies": [{"kind": "rcdb", "c_bar": 0}], "attack": {"kind": "none", "budget": 0}
    })");
    auto out_path = (dir / "t1.csv").string();
    CHECK(cmd_run(cfg_path, out_path, std::nullopt, true) == 0);
    std::istringstream lines(read_file(out_path));
    std::string line;
    int n = -1;  // skip header
    while (std::getline(lines, line)) ++n;
    CHECK(n == 1);
}

TEST_CASE("cmd_compare requires two policies and emits per-policy columns") {
    auto dir = temp_dir();
    auto one_policy = write_file(dir / "one.json", kSmallConfig);
    CHECK(cmd_compare(one_policy, (dir / "x.csv").string(), true) == 1);

    auto cfg_path = write_file(dir / "two.json", R"({
      "d": 2, "t": 15, "runs": 2, "base_seed": 3, "action_set": {"kind": "basis"},
      "policies": [{"kind": "rcdb", "name": "rcdb", "c_bar": 0},
                   {"kind": "maxpairucb", "name": "ucb"}],
      "attack": {"kind": "none", "budget": 0}
    })");
    auto out_path = (dir / "cmp.csv").string();
    CHECK(cmd_compare(cfg_path, out_path, true) == 0);
    std::istringstream lines(read_file(out_path));
    std::string header;
    std::getline(lines, header);
    CHECK(header == "round,rcdb_mean,rcdb_std,ucb_mean,ucb_std");

    // identical configurations produce identical mean columns
    std::string row;
    std::getline(lines, row);
    std::stringstream ss(row);
    std::string round, m1, s1, m2, s2;
    std::getline(ss, round, ',');
    std::getline(ss, m1, ',');
    std::getline(ss, s1, ',');
    std::getline(ss, m2, ',');
    std::getline(ss, s2, ',');
    CHECK(m1 == m2);  // rcdb with c_bar = 0 is maxpairucb
}

TEST_CASE("cmd_sweep table shape and validation") {
    auto dir = temp_dir();
    auto cfg_path = write_file(dir / "sweep.json", R"({
      "d": 2, "t": 30, "runs": 2, "base_seed": 3, "action_set": {"kind": "basis"},
      "policies": [{"kind": "rcdb", "name": "rcdb"}],
      "attack": {"kind": "greedy", "budget": 5}
    })");
    auto out_path = (dir / "sweep.csv").string();
    CHECK(cmd_sweep(cfg_path, out_path, "0,5,10", true) == 0);
    std::istringstream lines(read_file(out_path));
    std::string header;
    std::getline(lines, header);
    CHECK(header == "c,rcdb_final_mean,rcdb_final_std");
    int n = 0;
    std::string line;
    while (std::getline(lines, line)) ++n;
    CHECK(n == 3);

    CHECK(cmd_sweep(cfg_path, out_path, "10,5", true) == 1);
    CHECK(cmd_sweep(cfg_path, out_path, "10,40", true) == 1);  // exceeds t
}
