#pragma once

#include <limits>
#include <vector>

#include "rcdb/linalg.hpp"
#include "rcdb/link.hpp"

namespace rcdb {

// Sentinel for the C = 0 configuration: all weights are 1.
inline constexpr double kAlphaInfinity = std::numeric_limits<double>::infinity();

// One logged duel: difference feature, observed label, uncertainty weight,
// and (for the sigmoid specialization) the local-derivative estimate.
struct DuelRecord {
    Vec phi_diff;
    int observed = 0;
    double weight = 1.0;
    double v_weight = 0.0;
};

struct MleParams {
    double lambda = 1.0;
    double tol = 1e-10;   // gradient-norm stopping criterion
    int max_iter = 100;
};

// Stationary point of the strongly convex objective
//   lambda/2 ||theta||^2 + sum_i w_i * logloss_i(theta)
// via damped Newton. Throws NoConvergence if the residual stays above tol.
Vec solve_weighted_mle(const std::vector<DuelRecord>& history, const MleParams& params,
                       const LinkSpec& link, const Vec& warm_start);

// Gradient of the objective above; exposed so tests can certify residuals.
Vec mle_gradient(const std::vector<DuelRecord>& history, double lambda,
                 const LinkSpec& link, const Vec& theta);

// w = min{1, alpha / ||phi||_{Sigma^{-1}}}; 1 for phi = 0 or alpha = infinity.
double compute_weight(const Vec& phi_diff, const CholFactor& sigma_factor, double alpha);

SymMat update_sigma(const SymMat& sigma, const Vec& phi_diff, double w, double kappa);
SymMat update_lambda_mat(const SymMat& lam, const Vec& phi_diff, double w, double v);

}  // namespace rcdb
