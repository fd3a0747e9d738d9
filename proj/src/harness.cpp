#include "rcdb/harness.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

namespace rcdb {

namespace {

// stream ids for the per-episode generators
constexpr std::uint64_t kThetaStream = 0;
constexpr std::uint64_t kLabelStream = 1;
constexpr std::uint64_t kAdversaryStream = 2;

std::size_t second_best_action(const EnvModel& env) {
    std::size_t best = env.best_action;
    std::size_t runner = best == 0 ? 1 : 0;
    for (std::size_t a = 0; a < env.actions.size(); ++a) {
        if (a == best) continue;
        if (env.reward(a) > env.reward(runner)) runner = a;
    }
    return runner;
}

}  // namespace

RunResult run_episode(const RunConfig& cfg, const PolicyConfig& policy_cfg,
                      std::uint64_t seed) {
    if (cfg.T < 1) throw ConfigError("T must be >= 1");

    Rng theta_rng(cfg.redraw_theta_per_run ? seed : cfg.base_seed, kThetaStream);
    Rng label_rng(seed, kLabelStream);
    Rng adv_rng(seed, kAdversaryStream);

    const EnvModel env = build_env(cfg.action_set, static_cast<std::size_t>(cfg.d),
                                   cfg.theta, cfg.link, cfg.B, theta_rng);

    AttackState attack;
    attack.kind = cfg.attack.kind;
    attack.budget = cfg.attack.budget;
    attack.p = cfg.attack.p;
    attack.target = cfg.attack.target >= 0
                        ? static_cast<std::size_t>(cfg.attack.target)
                        : second_best_action(env);
    if (attack.kind == AttackKind::Misleading && attack.target == env.best_action)
        throw ConfigError("misleading attack target must be a non-optimal action");

    auto policy = make_policy(policy_cfg, env.actions, cfg.link, cfg.T, cfg.d, cfg.B,
                              cfg.delta);

    RunResult res;
    res.instant_regret.reserve(cfg.T);
    res.cum_regret.reserve(cfg.T);
    res.flips_used.reserve(cfg.T);
    res.weight.reserve(cfg.T);
    res.est_error_sigma.reserve(cfg.T);
    res.est_error_l2.reserve(cfg.T);
    res.radius.reserve(cfg.T);

    double cum = 0.0;
    for (int t = 1; t <= cfg.T; ++t) {
        try {
            const auto [a, b] = policy->select();
            const int label = sample_label(env, a, b, label_rng);
            const auto obs = corrupt(attack, t, a, b, label, env, adv_rng);
            res.radius.push_back(policy->confidence_radius());
            policy->observe(a, b, obs.observed);

            cum += instant_regret(env, a, b);
            res.instant_regret.push_back(instant_regret(env, a, b));
            res.cum_regret.push_back(cum);
            res.flips_used.push_back(attack.used);
            res.weight.push_back(policy->last_weight());
            res.est_error_sigma.push_back(policy->sigma_norm_error(env.theta_star));
            double l2 = 0.0;
            for (std::size_t j = 0; j < env.theta_star.size(); ++j) {
                const double dj = policy->theta()[j] - env.theta_star[j];
                l2 += dj * dj;
            }
            res.est_error_l2.push_back(std::sqrt(l2));
        } catch (const NotPositiveDefinite& e) {
            throw EpisodeFailure(t, e.what());
        } catch (const NoConvergence& e) {
            throw EpisodeFailure(t, e.what());
        }
    }
    return res;
}

std::vector<RunResult> run_policy(const RunConfig& cfg, const PolicyConfig& policy_cfg) {
    if (cfg.runs < 1) throw ConfigError("runs must be >= 1");
    std::vector<std::future<RunResult>> futures;
    futures.reserve(cfg.runs);
    for (int i = 0; i < cfg.runs; ++i) {
        const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(i);
        futures.push_back(std::async(std::launch::async, [&cfg, &policy_cfg, seed] {
            return run_episode(cfg, policy_cfg, seed);
        }));
    }
    std::vector<RunResult> results;
    results.reserve(cfg.runs);
    for (auto& f : futures) results.push_back(f.get());
    return results;
}

AggregateResult aggregate(const std::vector<RunResult>& results) {
    if (results.empty()) throw EmptyInput("aggregate: no runs");
    const std::size_t T = results[0].cum_regret.size();
    for (const auto& r : results)
        if (r.cum_regret.size() != T)
            throw DimensionMismatch("aggregate: episodes of unequal length");

    const double n = static_cast<double>(results.size());
    AggregateResult agg;
    agg.cum_mean.resize(T);
    agg.cum_std.resize(T);
    agg.instant_mean.resize(T);
    agg.flips_mean.resize(T);
    agg.weight_mean.resize(T);
    for (std::size_t t = 0; t < T; ++t) {
        double sum = 0.0, sum_inst = 0.0, sum_flips = 0.0, sum_w = 0.0;
        for (const auto& r : results) {
            sum += r.cum_regret[t];
            sum_inst += r.instant_regret[t];
            sum_flips += r.flips_used[t];
            sum_w += r.weight[t];
        }
        const double mean = sum / n;
        agg.cum_mean[t] = mean;
        agg.instant_mean[t] = sum_inst / n;
        agg.flips_mean[t] = sum_flips / n;
        agg.weight_mean[t] = sum_w / n;
        double ss = 0.0;
        for (const auto& r : results) {
            const double dev = r.cum_regret[t] - mean;
            ss += dev * dev;
        }
        agg.cum_std[t] = results.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    }
    return agg;
}

std::vector<SweepRow> sweep_budget(const RunConfig& cfg, const std::vector<int>& budgets) {
    if (budgets.empty()) throw EmptyInput("sweep_budget: no budgets");
    std::vector<SweepRow> table;
    table.reserve(budgets.size());
    for (int c : budgets) {
        if (c < 0 || c > cfg.T) throw ConfigError("budget out of range: " + std::to_string(c));
        RunConfig sub = cfg;
        sub.attack.budget = c;
        SweepRow row;
        row.c = c;
        for (const auto& pc : cfg.policies) {
            PolicyConfig tuned = pc;
            tuned.c_bar = c;  // known-budget mode: alpha and beta track C
            const auto agg = aggregate(run_policy(sub, tuned));
            row.final_mean.push_back(agg.cum_mean.back());
            row.final_std.push_back(agg.cum_std.back());
        }
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace rcdb
