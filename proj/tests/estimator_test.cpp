#include <doctest.h>

#include <cmath>
#include <functional>

#include "rcdb/estimator.hpp"
#include "rcdb/rng.hpp"

using namespace rcdb;

namespace {

// 1-d bisection oracle for lambda*x + sum w_i (sigma(phi_i x) - o_i) phi_i = 0
// specialized to the single-coordinate reductions used below.
double bisect(const std::function<double(double)>& g, double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (g(lo) * g(mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// Gradient-descent oracle on the weighted convex objective, independent of
// the Newton path.
Vec gd_oracle(const std::vector<DuelRecord>& history, double lambda, const LinkSpec& link,
              std::size_t d, long iters = 1000000, double step = 1e-3) {
    Vec theta(d, 0.0);
    for (long it = 0; it < iters; ++it) {
        Vec g = mle_gradient(history, lambda, link, theta);
        for (std::size_t j = 0; j < d; ++j) theta[j] -= step * g[j];
    }
    return theta;
}

DuelRecord rec(Vec phi, int o, double w) {
    DuelRecord r;
    r.phi_diff = std::move(phi);
    r.observed = o;
    r.weight = w;
    return r;
}

}  // namespace

TEST_CASE("empty history returns zero") {
    MleParams params;
    Vec theta = solve_weighted_mle({}, params, LinkSpec::sigmoid(), {0.3, -0.2});
    CHECK(theta[0] == doctest::Approx(0.0));
    CHECK(theta[1] == doctest::Approx(0.0));
}

TEST_CASE("single-record solution vs bisection") {
    MleParams params;
    std::vector<DuelRecord> h{rec({1.0, 0.0}, 1, 1.0)};
    Vec theta = solve_weighted_mle(h, params, LinkSpec::sigmoid(), {0.0, 0.0});
    const double expect = bisect(
        [](double x) { return x + link_value(LinkSpec::sigmoid(), x) - 1.0; }, 0.0, 1.0);
    CHECK(theta[0] == doctest::Approx(expect).epsilon(1e-8));
    CHECK(theta[0] == doctest::Approx(0.4011).epsilon(1e-3));
    CHECK(theta[1] == doctest::Approx(0.0));
}

TEST_CASE("two symmetric records") {
    MleParams params;
    std::vector<DuelRecord> h{rec({1.0, 0.0}, 1, 1.0), rec({-1.0, 0.0}, 0, 1.0)};
    Vec theta = solve_weighted_mle(h, params, LinkSpec::sigmoid(), {0.0, 0.0});
    const double expect = bisect(
        [](double x) { return x + 2.0 * (link_value(LinkSpec::sigmoid(), x) - 1.0); }, 0.0,
        2.0);
    CHECK(theta[0] == doctest::Approx(expect).epsilon(1e-8));
    CHECK(theta[1] == doctest::Approx(0.0));
}

TEST_CASE("matches gradient-descent oracle on random instances") {
    Rng rng(21, 0);
    MleParams params;
    for (int inst = 0; inst < 5; ++inst) {
        const std::size_t d = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
        const int n = 1 + static_cast<int>(rng.uniform(0, 10));
        std::vector<DuelRecord> h;
        for (int i = 0; i < n; ++i) {
            Vec phi(d);
            for (auto& x : phi) x = rng.uniform(-1.0, 1.0);
            h.push_back(rec(phi, rng.bernoulli(0.5), rng.uniform(0.1, 1.0)));
        }
        Vec newton = solve_weighted_mle(h, params, LinkSpec::sigmoid(), Vec(d, 0.0));
        Vec oracle = gd_oracle(h, params.lambda, LinkSpec::sigmoid(), d, 200000);
        for (std::size_t j = 0; j < d; ++j)
            CHECK(newton[j] == doctest::Approx(oracle[j]).epsilon(1e-4));
    }
}

TEST_CASE("residual certificate and warm-start independence") {
    Rng rng(22, 0);
    MleParams params;
    std::vector<DuelRecord> h;
    for (int i = 0; i < 8; ++i) {
        Vec phi{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        h.push_back(rec(phi, rng.bernoulli(0.6), rng.uniform(0.2, 1.0)));
    }
    Vec cold = solve_weighted_mle(h, params, LinkSpec::sigmoid(), {0.0, 0.0});
    Vec warm = solve_weighted_mle(h, params, LinkSpec::sigmoid(), {1.5, -2.0});
    CHECK(norm2(mle_gradient(h, params.lambda, LinkSpec::sigmoid(), cold)) <= params.tol);
    for (std::size_t j = 0; j < 2; ++j)
        CHECK(std::abs(cold[j] - warm[j]) <= 10.0 * params.tol);
}

TEST_CASE("no convergence raises") {
    MleParams params;
    params.max_iter = 1;
    params.tol = 1e-16;
    std::vector<DuelRecord> h{rec({1.0, 0.0}, 1, 1.0), rec({0.0, 1.0}, 0, 0.5)};
    CHECK_THROWS_AS(solve_weighted_mle(h, params, LinkSpec::sigmoid(), {5.0, -5.0}),
                    NoConvergence);
}

TEST_CASE("compute_weight") {
    auto identity_f = cholesky(SymMat::identity(2));
    CHECK(compute_weight({0.3, 0.0}, identity_f, 0.5) == doctest::Approx(1.0));
    CHECK(compute_weight({1.0, 1.0}, identity_f, 0.7) ==
          doctest::Approx(0.7 / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(compute_weight({0.0, 0.0}, identity_f, 0.5) == doctest::Approx(1.0));
    CHECK(compute_weight({1.0, 1.0}, identity_f, kAlphaInfinity) == doctest::Approx(1.0));

    // truncated weights satisfy w * ||phi|| = alpha exactly
    Rng rng(23, 0);
    for (int i = 0; i < 100; ++i) {
        Vec phi{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const double alpha = rng.uniform(0.01, 1.0);
        const double w = compute_weight(phi, identity_f, alpha);
        if (w < 1.0)
            CHECK(w * elliptical_norm(identity_f, phi) == doctest::Approx(alpha).epsilon(1e-10));
    }
}

TEST_CASE("covariance updates") {
    auto s = update_sigma(SymMat::identity(2), {2.0, 0.0}, 1.0, 0.25);
    CHECK(s(0, 0) == doctest::Approx(2.0));
    CHECK(s(1, 1) == doctest::Approx(1.0));

    auto s2 = update_sigma(SymMat::identity(2), {1.0, 1.0}, 0.5, 0.5);
    CHECK(s2(0, 0) == doctest::Approx(1.25));
    CHECK(s2(0, 1) == doctest::Approx(0.25));

    auto l = update_lambda_mat(SymMat::identity(2), {1.0, 0.0}, 1.0, 0.25);
    CHECK(l(0, 0) == doctest::Approx(1.25));
    CHECK(l(1, 1) == doctest::Approx(1.0));

    // v = kappa reproduces update_sigma
    auto a = update_sigma(SymMat::identity(2), {0.7, -0.3}, 0.6, 0.1);
    auto b = update_lambda_mat(SymMat::identity(2), {0.7, -0.3}, 0.6, 0.1);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(a(i, j) == doctest::Approx(b(i, j)));
}

TEST_CASE("covariance monotone in elliptical norm") {
    Rng rng(24, 0);
    SymMat sigma = SymMat::identity(3, 0.5);
    Vec probe{0.3, -0.4, 0.8};
    double prev = elliptical_norm(cholesky(sigma), probe);
    for (int i = 0; i < 20; ++i) {
        Vec phi{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        sigma = update_sigma(sigma, phi, rng.uniform(0.1, 1.0), 0.2);
        const double cur = elliptical_norm(cholesky(sigma), probe);
        CHECK(cur <= prev + 1e-12);
        prev = cur;
    }
}
