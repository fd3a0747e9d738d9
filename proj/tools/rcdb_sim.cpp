#include <cstdint>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rcdb/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Contextual dueling bandit simulator with adversarial label flipping"};
    app.require_subcommand(1);

    std::string config_path, out_path, budgets;
    std::int64_t seed = -1;
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress progress output");

    auto* run = app.add_subcommand("run", "run one policy, emit per-round CSV");
    run->add_option("--config", config_path, "JSON config path")->required();
    run->add_option("--out", out_path, "output CSV path")->required();
    run->add_option("--seed", seed, "override base_seed");

    auto* compare = app.add_subcommand("compare", "run all policies, emit regret curves");
    compare->add_option("--config", config_path, "JSON config path")->required();
    compare->add_option("--out", out_path, "output CSV path")->required();

    auto* sweep = app.add_subcommand("sweep", "sweep the corruption budget");
    sweep->add_option("--config", config_path, "JSON config path")->required();
    sweep->add_option("--out", out_path, "output CSV path")->required();
    sweep->add_option("--budgets", budgets, "comma-separated ascending budgets")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    std::optional<std::uint64_t> seed_override;
    if (seed >= 0) seed_override = static_cast<std::uint64_t>(seed);

    if (run->parsed()) return rcdb::cmd_run(config_path, out_path, seed_override, quiet);
    if (compare->parsed()) return rcdb::cmd_compare(config_path, out_path, quiet);
    return rcdb::cmd_sweep(config_path, out_path, budgets, quiet);
}
