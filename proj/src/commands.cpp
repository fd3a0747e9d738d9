#include "rcdb/commands.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace rcdb {

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::vector<int> parse_budgets(const std::string& budgets_csv) {
    std::vector<int> budgets;
    std::stringstream ss(budgets_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ConfigError("invalid budget value: " + tok);
        }
        if (pos != tok.size()) throw ConfigError("invalid budget value: " + tok);
        if (v < 0) throw ConfigError("budgets must be nonnegative");
        if (!budgets.empty() && v <= budgets.back())
            throw ConfigError("budgets must be strictly ascending");
        budgets.push_back(v);
    }
    if (budgets.empty()) throw ConfigError("empty budget list");
    return budgets;
}

namespace {

void write_sidecar(const RunConfig& cfg, const std::string& out_path) {
    std::ofstream out(out_path + ".config.json");
    if (!out) throw ConfigError("cannot write sidecar config next to " + out_path);
    out << resolved_config_json(cfg) << "\n";
}

std::ofstream open_out(const std::string& out_path) {
    std::ofstream out(out_path);
    if (!out) throw ConfigError("cannot write output file: " + out_path);
    return out;
}

int run_guarded(bool quiet, const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const EpisodeFailure& e) {
        if (!quiet) std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        if (!quiet) std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int cmd_run(const std::string& config_path, const std::string& out_path,
            std::optional<std::uint64_t> seed_override, bool quiet) {
    return run_guarded(quiet, [&] {
        RunConfig cfg = load_config(config_path);
        if (seed_override) cfg.base_seed = *seed_override;
        const auto agg = aggregate(run_policy(cfg, cfg.policies.front()));

        std::ofstream out = open_out(out_path);
        out << "round,instant_regret,cum_regret_mean,cum_regret_std,flips_used_mean,"
               "weight_mean\n";
        for (std::size_t t = 0; t < agg.cum_mean.size(); ++t)
            out << (t + 1) << ',' << format_number(agg.instant_mean[t]) << ','
                << format_number(agg.cum_mean[t]) << ',' << format_number(agg.cum_std[t])
                << ',' << format_number(agg.flips_mean[t]) << ','
                << format_number(agg.weight_mean[t]) << '\n';
        write_sidecar(cfg, out_path);
        if (!quiet)
            std::cout << "wrote " << agg.cum_mean.size() << " rows to " << out_path << "\n";
    });
}

int cmd_compare(const std::string& config_path, const std::string& out_path, bool quiet) {
    return run_guarded(quiet, [&] {
        const RunConfig cfg = load_config(config_path);
        if (cfg.policies.size() < 2)
            throw ConfigError("compare requires at least 2 policies");

        std::vector<AggregateResult> aggs;
        aggs.reserve(cfg.policies.size());
        for (const auto& pc : cfg.policies) aggs.push_back(aggregate(run_policy(cfg, pc)));

        std::ofstream out = open_out(out_path);
        out << "round";
        for (const auto& pc : cfg.policies) out << ',' << pc.name << "_mean," << pc.name << "_std";
        out << '\n';
        for (int t = 0; t < cfg.T; ++t) {
            out << (t + 1);
            for (const auto& agg : aggs)
                out << ',' << format_number(agg.cum_mean[t]) << ','
                    << format_number(agg.cum_std[t]);
            out << '\n';
        }
        write_sidecar(cfg, out_path);
        if (!quiet) std::cout << "wrote compare CSV to " << out_path << "\n";
    });
}

int cmd_sweep(const std::string& config_path, const std::string& out_path,
              const std::string& budgets_csv, bool quiet) {
    return run_guarded(quiet, [&] {
        const RunConfig cfg = load_config(config_path);
        const std::vector<int> budgets = parse_budgets(budgets_csv);
        for (int c : budgets)
            if (c > cfg.T) throw ConfigError("budget exceeds t: " + std::to_string(c));

        const auto table = sweep_budget(cfg, budgets);

        std::ofstream out = open_out(out_path);
        out << "c";
        for (const auto& pc : cfg.policies)
            out << ',' << pc.name << "_final_mean," << pc.name << "_final_std";
        out << '\n';
        for (const auto& row : table) {
            out << row.c;
            for (std::size_t i = 0; i < row.final_mean.size(); ++i)
                out << ',' << format_number(row.final_mean[i]) << ','
                    << format_number(row.final_std[i]);
            out << '\n';
        }
        write_sidecar(cfg, out_path);
        if (!quiet) std::cout << "wrote sweep CSV to " << out_path << "\n";
    });
}

}  // namespace rcdb
