#include "rcdb/environment.hpp"

#include <cmath>
#include <string>

namespace rcdb {

std::vector<Vec> build_actions(const ActionSetSpec& spec, std::size_t d) {
    std::vector<Vec> actions;
    switch (spec.kind) {
        case ActionSetKind::Hypercube: {
            if (d < 1 || d > 20)
                throw ConfigError("hypercube action set requires 1 <= d <= 20");
            const double c = 1.0 / std::sqrt(static_cast<double>(d));
            const std::size_t n = std::size_t{1} << d;
            actions.reserve(n);
            for (std::size_t mask = 0; mask < n; ++mask) {
                Vec a(d);
                for (std::size_t i = 0; i < d; ++i)
                    a[i] = (mask >> i) & 1 ? c : -c;
                actions.push_back(std::move(a));
            }
            break;
        }
        case ActionSetKind::Basis: {
            for (std::size_t i = 0; i < d; ++i) {
                Vec a(d, 0.0);
                a[i] = 1.0;
                actions.push_back(std::move(a));
            }
            break;
        }
        case ActionSetKind::Explicit:
            actions = spec.explicit_actions;
            break;
    }
    if (actions.size() < 2) throw ConfigError("action set must contain at least 2 actions");
    for (const auto& a : actions) {
        if (a.size() != d) throw DimensionMismatch("action feature has wrong dimension");
        if (norm2(a) > 1.0 + 1e-12)
            throw ConfigError("action feature exceeds unit norm: " + std::to_string(norm2(a)));
    }
    return actions;
}

double EnvModel::reward(std::size_t a) const { return dot(theta_star, actions[a]); }

EnvModel build_env(const ActionSetSpec& spec, std::size_t d, const ThetaMode& theta_mode,
                   const LinkSpec& link, double B, Rng& rng) {
    EnvModel env;
    env.link = link;
    env.B = B;
    env.actions = build_actions(spec, d);

    if (theta_mode.random_norm2) {
        Vec t(d);
        for (std::size_t i = 0; i < d; ++i) t[i] = rng.uniform(-0.5, 0.5);
        const double n = norm2(t);
        if (n < 1e-12) throw InvalidTheta("degenerate random theta draw");
        for (auto& x : t) x *= 2.0 / n;
        env.theta_star = std::move(t);
    } else {
        if (theta_mode.explicit_values.size() != d)
            throw DimensionMismatch("explicit theta has wrong dimension");
        env.theta_star = theta_mode.explicit_values;
    }
    if (norm2(env.theta_star) > B + 1e-9)
        throw InvalidTheta("||theta*|| = " + std::to_string(norm2(env.theta_star)) +
                           " exceeds B = " + std::to_string(B));

    // piecewise-linear link is only defined on its linear branch
    const LinkKind base = link.kind == LinkKind::Scaled ? link.inner : link.kind;
    if (base == LinkKind::PiecewiseLinear) {
        const double sc = link.kind == LinkKind::Scaled ? link.scale : 1.0;
        for (std::size_t a = 0; a < env.actions.size(); ++a)
            for (std::size_t b = 0; b < env.actions.size(); ++b) {
                double gap = env.reward(a) - env.reward(b);
                if (std::abs(sc * gap) > 0.5 + 1e-12)
                    throw DomainExceedsLinearRegion(
                        "pairwise reward gap " + std::to_string(gap) +
                        " leaves the linear branch");
            }
    }

    std::size_t best = 0;
    for (std::size_t a = 1; a < env.actions.size(); ++a)
        if (env.reward(a) > env.reward(best)) best = a;
    env.best_action = best;
    return env;
}

static void check_index(const EnvModel& env, std::size_t a) {
    if (a >= env.actions.size())
        throw IndexOutOfRange("action index " + std::to_string(a) + " out of range");
}

double true_preference_prob(const EnvModel& env, std::size_t a, std::size_t b) {
    check_index(env, a);
    check_index(env, b);
    return link_value(env.link, env.reward(a) - env.reward(b));
}

int sample_label(const EnvModel& env, std::size_t a, std::size_t b, Rng& rng) {
    return rng.bernoulli(true_preference_prob(env, a, b));
}

double instant_regret(const EnvModel& env, std::size_t a, std::size_t b) {
    check_index(env, a);
    check_index(env, b);
    return 2.0 * env.reward(env.best_action) - env.reward(a) - env.reward(b);
}

}  // namespace rcdb
