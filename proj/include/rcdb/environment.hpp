#pragma once

#include <cstddef>
#include <vector>

#include "rcdb/linalg.hpp"
#include "rcdb/link.hpp"
#include "rcdb/rng.hpp"

namespace rcdb {

enum class ActionSetKind { Hypercube, Basis, Explicit };

struct ActionSetSpec {
    ActionSetKind kind = ActionSetKind::Hypercube;
    std::vector<Vec> explicit_actions;  // used when kind == Explicit
};

// Materializes the action features. Hypercube: all 2^d vertices of
// {-1/sqrt(d), 1/sqrt(d)}^d (d <= 20); basis: e_1..e_d.
std::vector<Vec> build_actions(const ActionSetSpec& spec, std::size_t d);

struct ThetaMode {
    bool random_norm2 = true;   // draw uniform in [-0.5,0.5]^d, rescale to ||.||_2 = 2
    Vec explicit_values;        // used when !random_norm2
};

// Ground-truth linear preference environment. Static context: phi(x,a) = a.
struct EnvModel {
    Vec theta_star;
    std::vector<Vec> actions;
    LinkSpec link;
    double B = 2.0;
    std::size_t best_action = 0;  // lowest index among reward maximizers

    std::size_t dim() const { return theta_star.size(); }
    double reward(std::size_t a) const;
};

// Validates ||theta*|| <= B and, for the piecewise-linear link, that every
// pairwise gap stays inside the linear branch.
EnvModel build_env(const ActionSetSpec& spec, std::size_t d, const ThetaMode& theta_mode,
                   const LinkSpec& link, double B, Rng& rng);

double true_preference_prob(const EnvModel& env, std::size_t a, std::size_t b);

// 1 means the first argument wins.
int sample_label(const EnvModel& env, std::size_t a, std::size_t b, Rng& rng);

double instant_regret(const EnvModel& env, std::size_t a, std::size_t b);

}  // namespace rcdb
