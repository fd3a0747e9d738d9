#include "rcdb/estimator.hpp"

#include <cmath>

namespace rcdb {

namespace {

double softplus(double x) {
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

double record_loss(const DuelRecord& r, const LinkSpec& link, const Vec& theta) {
    const double z = dot(r.phi_diff, theta);
    if (link.kind == LinkKind::Sigmoid)
        return r.observed ? softplus(-z) : softplus(z);
    // generic link: clamp away from 0/1 so the line search stays finite
    const double p = std::min(1.0 - 1e-15, std::max(1e-15, link_value(link, z)));
    return r.observed ? -std::log(p) : -std::log(1.0 - p);
}

double objective(const std::vector<DuelRecord>& history, double lambda,
                 const LinkSpec& link, const Vec& theta) {
    double f = 0.5 * lambda * dot(theta, theta);
    for (const auto& r : history) f += r.weight * record_loss(r, link, theta);
    return f;
}

}  // namespace

Vec mle_gradient(const std::vector<DuelRecord>& history, double lambda,
                 const LinkSpec& link, const Vec& theta) {
    Vec g(theta.size());
    for (std::size_t j = 0; j < theta.size(); ++j) g[j] = lambda * theta[j];
    for (const auto& r : history) {
        const double resid = r.weight * (link_value(link, dot(r.phi_diff, theta)) - r.observed);
        for (std::size_t j = 0; j < theta.size(); ++j) g[j] += resid * r.phi_diff[j];
    }
    return g;
}

Vec solve_weighted_mle(const std::vector<DuelRecord>& history, const MleParams& params,
                       const LinkSpec& link, const Vec& warm_start) {
    const std::size_t d = warm_start.size();
    Vec theta = warm_start;

    for (int iter = 0; iter < params.max_iter; ++iter) {
        Vec g = mle_gradient(history, params.lambda, link, theta);
        if (norm2(g) <= params.tol) return theta;

        // Hessian: lambda I + sum_i w_i sigma'(phi^T theta) phi phi^T, always SPD
        SymMat h = SymMat::identity(d, params.lambda);
        for (const auto& r : history) {
            const double v = r.weight * link_derivative(link, dot(r.phi_diff, theta));
            if (v > 0.0) h.add_outer(r.phi_diff, v);
        }
        Vec step = solve(cholesky(h), g);

        const double f0 = objective(history, params.lambda, link, theta);
        // slack absorbs rounding noise near the optimum, where a full Newton
        // step moves the objective by less than an ulp but still contracts
        // the gradient quadratically
        const double accept = f0 + 1e-12 * (1.0 + std::abs(f0));
        double scale = 1.0;
        Vec trial(d);
        for (int halvings = 0; halvings <= 30; ++halvings) {
            for (std::size_t j = 0; j < d; ++j) trial[j] = theta[j] - scale * step[j];
            if (objective(history, params.lambda, link, trial) <= accept) break;
            scale *= 0.5;
        }
        theta = trial;
    }

    if (norm2(mle_gradient(history, params.lambda, link, theta)) <= params.tol) return theta;
    throw NoConvergence("weighted MLE: gradient norm above tolerance after " +
                        std::to_string(params.max_iter) + " iterations");
}

double compute_weight(const Vec& phi_diff, const CholFactor& sigma_factor, double alpha) {
    if (std::isinf(alpha)) return 1.0;
    const double n = elliptical_norm(sigma_factor, phi_diff);
    if (n == 0.0) return 1.0;
    return std::min(1.0, alpha / n);
}

SymMat update_sigma(const SymMat& sigma, const Vec& phi_diff, double w, double kappa) {
    return rank_one_add(sigma, phi_diff, w * kappa);
}

SymMat update_lambda_mat(const SymMat& lam, const Vec& phi_diff, double w, double v) {
    return rank_one_add(lam, phi_diff, w * v);
}

}  // namespace rcdb
