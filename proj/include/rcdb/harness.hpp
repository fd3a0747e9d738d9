#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcdb/adversary.hpp"
#include "rcdb/environment.hpp"
#include "rcdb/policy.hpp"

namespace rcdb {

struct AttackConfig {
    AttackKind kind = AttackKind::None;
    int budget = 0;
    double p = 0.5;
    // -1: pick the second-best action by true reward at episode start
    long long target = -1;
};

struct RunConfig {
    int d = 5;
    int T = 2000;
    double B = 2.0;
    LinkSpec link = LinkSpec::sigmoid();
    ActionSetSpec action_set;
    ThetaMode theta;
    bool redraw_theta_per_run = true;
    int runs = 10;
    std::uint64_t base_seed = 1;
    double delta = 0.05;
    std::vector<PolicyConfig> policies;
    AttackConfig attack;
};

// Per-round traces of one episode; all sequences have length T.
struct RunResult {
    std::vector<double> instant_regret;
    std::vector<double> cum_regret;
    std::vector<int> flips_used;
    std::vector<double> weight;
    std::vector<double> est_error_sigma;  // ||theta_t - theta*||_{Sigma_t}
    std::vector<double> est_error_l2;
    std::vector<double> radius;           // confidence radius in effect
};

struct AggregateResult {
    std::vector<double> cum_mean;
    std::vector<double> cum_std;  // sample std, n-1 denominator; 0 when n == 1
    std::vector<double> instant_mean;
    std::vector<double> flips_mean;
    std::vector<double> weight_mean;
};

// Deterministic in (cfg, seed). Label sampling and adversary randomness use
// independent generator streams derived from the seed.
RunResult run_episode(const RunConfig& cfg, const PolicyConfig& policy_cfg,
                      std::uint64_t seed);

// Runs `cfg.runs` episodes with seeds base_seed + 0 .. base_seed + runs-1,
// in parallel; results ordered by seed.
std::vector<RunResult> run_policy(const RunConfig& cfg, const PolicyConfig& policy_cfg);

AggregateResult aggregate(const std::vector<RunResult>& results);

struct SweepRow {
    int c = 0;
    std::vector<double> final_mean;  // per policy, config order
    std::vector<double> final_std;
};

// Re-derives each policy's tuning level from C (known-budget mode) and runs
// the full seed set per budget.
std::vector<SweepRow> sweep_budget(const RunConfig& cfg, const std::vector<int>& budgets);

}  // namespace rcdb
