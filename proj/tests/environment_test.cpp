#include <doctest.h>

#include <cmath>

#include "rcdb/environment.hpp"

using namespace rcdb;

namespace {

EnvModel two_arm_env(double theta1, LinkSpec link, double B = 2.0) {
    ActionSetSpec spec;
    spec.kind = ActionSetKind::Explicit;
    spec.explicit_actions = {{1.0, 0.0}, {-1.0, 0.0}};
    ThetaMode mode;
    mode.random_norm2 = false;
    mode.explicit_values = {theta1, 0.0};
    Rng rng(1, 0);
    return build_env(spec, 2, mode, link, B, rng);
}

}  // namespace

TEST_CASE("build_env explicit two arms") {
    EnvModel env = two_arm_env(2.0, LinkSpec::sigmoid());
    CHECK(env.best_action == 0);
    CHECK(env.theta_star[0] == doctest::Approx(2.0));
}

TEST_CASE("build_env basis with scaled basis theta") {
    ActionSetSpec spec;
    spec.kind = ActionSetKind::Basis;
    ThetaMode mode;
    mode.random_norm2 = false;
    mode.explicit_values = {0.25, 0.0, 0.0, 0.0};
    Rng rng(1, 0);
    EnvModel env = build_env(spec, 4, mode, LinkSpec::piecewise_linear(), 1.0, rng);
    CHECK(env.best_action == 0);
    CHECK(env.actions.size() == 4);
}

TEST_CASE("build_env random theta has norm 2") {
    ActionSetSpec spec;  // hypercube
    ThetaMode mode;
    Rng rng(1, 0);
    EnvModel env = build_env(spec, 5, mode, LinkSpec::sigmoid(), 2.0, rng);
    CHECK(norm2(env.theta_star) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(env.actions.size() == 32);
}

TEST_CASE("build_env rejects theta above B") {
    CHECK_THROWS_AS(two_arm_env(3.0, LinkSpec::sigmoid(), 2.0), InvalidTheta);
}

TEST_CASE("build_env rejects piecewise link outside linear branch") {
    CHECK_THROWS_AS(two_arm_env(2.0, LinkSpec::piecewise_linear()),
                    DomainExceedsLinearRegion);
}

TEST_CASE("true_preference_prob") {
    EnvModel env = two_arm_env(2.0, LinkSpec::sigmoid());
    CHECK(true_preference_prob(env, 0, 0) == doctest::Approx(0.5));
    CHECK(true_preference_prob(env, 0, 1) == doctest::Approx(0.982014).epsilon(1e-5));
    CHECK(true_preference_prob(env, 0, 1) + true_preference_prob(env, 1, 0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(true_preference_prob(env, 0, 7), IndexOutOfRange);

    EnvModel pw = two_arm_env(0.2, LinkSpec::piecewise_linear());
    CHECK(true_preference_prob(pw, 0, 1) == doctest::Approx(0.9));
}

TEST_CASE("sample_label statistics") {
    EnvModel env = two_arm_env(2.0, LinkSpec::sigmoid());
    Rng rng(42, 1);
    int wins = 0, ties = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) wins += sample_label(env, 0, 1, rng);
    for (int i = 0; i < n; ++i) ties += sample_label(env, 0, 0, rng);
    CHECK(std::abs(wins / double(n) - 0.982) < 0.005);
    CHECK(std::abs(ties / double(n) - 0.5) < 0.01);
}

TEST_CASE("sample_label is seed reproducible") {
    EnvModel env = two_arm_env(2.0, LinkSpec::sigmoid());
    Rng a(99, 1), b(99, 1);
    for (int i = 0; i < 200; ++i)
        CHECK(sample_label(env, 0, 1, a) == sample_label(env, 0, 1, b));
}

TEST_CASE("instant_regret arithmetic") {
    ActionSetSpec spec;
    spec.kind = ActionSetKind::Explicit;
    spec.explicit_actions = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}};
    ThetaMode mode;
    mode.random_norm2 = false;
    mode.explicit_values = {2.0, 0.0};
    Rng rng(1, 0);
    EnvModel env = build_env(spec, 2, mode, LinkSpec::sigmoid(), 2.0, rng);

    CHECK(instant_regret(env, 0, 0) == doctest::Approx(0.0));
    CHECK(instant_regret(env, 2, 1) == doctest::Approx(6.0));
    CHECK(instant_regret(env, 0, 2) == doctest::Approx(2.0));
    CHECK(instant_regret(env, 2, 0) == doctest::Approx(instant_regret(env, 0, 2)));
    // bounded by 4B
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            CHECK(instant_regret(env, a, b) >= 0.0);
            CHECK(instant_regret(env, a, b) <= 4.0 * env.B);
        }
}
