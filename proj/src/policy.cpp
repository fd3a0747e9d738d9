#include "rcdb/policy.hpp"

#include <algorithm>
#include <cmath>

namespace rcdb {

// ---------------------------------------------------------------------------
// Parameter schedules

double beta_rcdb(int T, int d, const RcdbParams& p) {
    const double alpha_c =
        std::isinf(p.alpha) ? 0.0 : p.alpha * static_cast<double>(p.c_for_tuning);
    return std::sqrt(p.lambda) * p.B + alpha_c +
           std::sqrt(d * std::log((1.0 + 2.0 * T / p.lambda) / p.delta) / p.kappa);
}

RcdbParams derive_rcdb_params(int T, int d, double B, double kappa, double delta,
                              int c_for_tuning) {
    RcdbParams p;
    p.B = B;
    p.kappa = kappa;
    p.delta = delta;
    p.c_for_tuning = c_for_tuning;
    p.lambda = 1.0 / (B * B);
    p.alpha = c_for_tuning > 0
                  ? std::sqrt(static_cast<double>(d)) / (c_for_tuning * std::sqrt(kappa))
                  : kAlphaInfinity;
    p.beta = beta_rcdb(T, d, p);
    return p;
}

double RcdbsParams::alpha_c() const {
    return std::isinf(alpha) ? 0.0 : alpha * static_cast<double>(c_for_tuning);
}

double RcdbsParams::beta_t(int t) const {
    return std::sqrt(lambda) * B +
           std::sqrt(static_cast<double>(d) *
                     std::log(2.0 * (1.0 + 2.0 * t / lambda) / delta)) /
               std::sqrt(kappa) +
           alpha_c();
}

double RcdbsParams::beta_tilde_t(int t) const {
    const double dd = static_cast<double>(d);
    return (1.0 + 4.0 * B) *
           (std::sqrt(lambda) * B +
            (2.0 / std::sqrt(lambda)) * dd *
                std::log((dd * lambda + 2.0 * t) / (dd * lambda * delta)) +
            alpha_c());
}

RcdbsParams derive_rcdbs_params(int d, double B, double kappa, double delta,
                                int c_for_tuning) {
    RcdbsParams p;
    p.d = d;
    p.B = B;
    p.kappa = kappa;
    p.delta = delta;
    p.c_for_tuning = c_for_tuning;
    p.lambda = static_cast<double>(d) / B;
    p.alpha = c_for_tuning > 0
                  ? (std::sqrt(static_cast<double>(d)) + std::sqrt(p.lambda) * B) /
                        c_for_tuning
                  : kAlphaInfinity;
    return p;
}

// ---------------------------------------------------------------------------

double symmetric_pair_score(const Vec& theta, const CholFactor& cov_factor, double bonus,
                            const Vec& phi_a, const Vec& phi_b) {
    const std::size_t d = theta.size();
    Vec sum(d), diff(d);
    for (std::size_t j = 0; j < d; ++j) {
        sum[j] = phi_a[j] + phi_b[j];
        diff[j] = phi_a[j] - phi_b[j];
    }
    return dot(sum, theta) + bonus * elliptical_norm(cov_factor, diff);
}

GlmDuelPolicy::GlmDuelPolicy(std::vector<Vec> actions, LinkSpec link, RcdbParams params,
                             SelectRule rule)
    : actions_(std::move(actions)),
      link_(link),
      params_(params),
      rule_(rule),
      theta_(actions_.empty() ? 0 : actions_[0].size(), 0.0),
      sigma_(SymMat::identity(theta_.size(), params.lambda)) {
    mle_.lambda = params_.lambda;
}

Vec GlmDuelPolicy::phi_diff(std::size_t a, std::size_t b) const {
    Vec d(theta_.size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = actions_[a][j] - actions_[b][j];
    return d;
}

const CholFactor& GlmDuelPolicy::sigma_factor() {
    if (!factor_fresh_) {
        factor_ = cholesky(sigma_);
        factor_fresh_ = true;
    }
    return factor_;
}

std::pair<std::size_t, std::size_t> GlmDuelPolicy::select_symmetric(const CholFactor& f,
                                                                    double bonus) {
    std::pair<std::size_t, std::size_t> best{0, 0};
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < actions_.size(); ++a)
        for (std::size_t b = a; b < actions_.size(); ++b) {
            const double s = symmetric_pair_score(theta_, f, bonus, actions_[a], actions_[b]);
            if (s > best_score) {
                best_score = s;
                best = {a, b};
            }
        }
    return best;
}

std::pair<std::size_t, std::size_t> GlmDuelPolicy::select_maxinp(const CholFactor& f,
                                                                 double bonus) {
    // promising set: arms no other arm beats by more than the bonus margin
    std::vector<std::size_t> promising;
    for (std::size_t a = 0; a < actions_.size(); ++a) {
        bool beaten = false;
        for (std::size_t b = 0; b < actions_.size() && !beaten; ++b) {
            if (a == b) continue;
            const Vec diff = phi_diff(b, a);
            if (dot(diff, theta_) > bonus * elliptical_norm(f, diff)) beaten = true;
        }
        if (!beaten) promising.push_back(a);
    }
    if (promising.empty()) {
        promising.resize(actions_.size());
        for (std::size_t a = 0; a < actions_.size(); ++a) promising[a] = a;
    }
    std::pair<std::size_t, std::size_t> best{promising[0], promising[0]};
    double best_sep = -1.0;
    for (std::size_t i = 0; i < promising.size(); ++i)
        for (std::size_t j = i; j < promising.size(); ++j) {
            const double sep =
                elliptical_norm(f, phi_diff(promising[i], promising[j]));
            if (sep > best_sep) {
                best_sep = sep;
                best = {promising[i], promising[j]};
            }
        }
    return best;
}

std::pair<std::size_t, std::size_t> GlmDuelPolicy::select_colstim(const CholFactor& f,
                                                                  double bonus) {
    std::size_t first = 0;
    for (std::size_t a = 1; a < actions_.size(); ++a)
        if (dot(actions_[a], theta_) > dot(actions_[first], theta_)) first = a;
    std::size_t second = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < actions_.size(); ++b) {
        const double s =
            dot(actions_[b], theta_) + bonus * elliptical_norm(f, phi_diff(b, first));
        if (s > best_score) {
            best_score = s;
            second = b;
        }
    }
    return {std::min(first, second), std::max(first, second)};
}

std::pair<std::size_t, std::size_t> GlmDuelPolicy::select() {
    const CholFactor& f = sigma_factor();
    const double bonus = params_.beta;
    switch (rule_) {
        case SelectRule::Symmetric: return select_symmetric(f, bonus);
        case SelectRule::MaxInp: return select_maxinp(f, bonus);
        case SelectRule::Colstim: return select_colstim(f, bonus);
    }
    return {0, 0};
}

void GlmDuelPolicy::observe(std::size_t a, std::size_t b, int observed) {
    Vec phi = phi_diff(a, b);
    // weight uses the pre-update Sigma_t
    last_weight_ = compute_weight(phi, sigma_factor(), params_.alpha);
    DuelRecord rec;
    rec.phi_diff = std::move(phi);
    rec.observed = observed;
    rec.weight = last_weight_;
    rec.v_weight = params_.kappa;
    sigma_ = update_sigma(sigma_, rec.phi_diff, rec.weight, params_.kappa);
    factor_fresh_ = false;
    history_.push_back(std::move(rec));
    theta_ = solve_weighted_mle(history_, mle_, link_, theta_);
    ++round_;
}

double GlmDuelPolicy::sigma_norm_error(const Vec& theta_star) const {
    Vec diff(theta_.size());
    for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = theta_[j] - theta_star[j];
    return std::sqrt(sigma_.quad_form(diff));
}

// ---------------------------------------------------------------------------

RcdbsPolicy::RcdbsPolicy(std::vector<Vec> actions, LinkSpec link, RcdbsParams params,
                         double bonus_scale)
    : actions_(std::move(actions)),
      link_(link),
      params_(params),
      theta_(actions_.empty() ? 0 : actions_[0].size(), 0.0),
      sigma_(SymMat::identity(theta_.size(), params.lambda)),
      lambda_(SymMat::identity(theta_.size(), params.lambda)),
      bonus_scale_(bonus_scale) {
    if (link.kind != LinkKind::Sigmoid)
        throw WrongLink("RCDB-S requires the sigmoid link");
    mle_.lambda = params_.lambda;
}

Vec RcdbsPolicy::phi_diff(std::size_t a, std::size_t b) const {
    Vec d(theta_.size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = actions_[a][j] - actions_[b][j];
    return d;
}

std::pair<std::size_t, std::size_t> RcdbsPolicy::select() {
    const CholFactor f = cholesky(lambda_);
    const double bonus = bonus_scale_ * params_.beta_tilde_t(round_);
    std::pair<std::size_t, std::size_t> best{0, 0};
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < actions_.size(); ++a)
        for (std::size_t b = a; b < actions_.size(); ++b) {
            const double s = symmetric_pair_score(theta_, f, bonus, actions_[a], actions_[b]);
            if (s > best_score) {
                best_score = s;
                best = {a, b};
            }
        }
    return best;
}

void RcdbsPolicy::observe(std::size_t a, std::size_t b, int observed) {
    Vec phi = phi_diff(a, b);
    const CholFactor sigma_f = cholesky(sigma_);
    last_weight_ = compute_weight(phi, sigma_f, params_.alpha);
    // optimistic gap bound, then the local-derivative lower bound
    const double delta_hat = std::abs(dot(phi, theta_)) +
                             params_.beta_t(round_) * elliptical_norm(sigma_f, phi);
    last_v_ = std::max(params_.kappa, link_derivative(link_, delta_hat));

    DuelRecord rec;
    rec.phi_diff = std::move(phi);
    rec.observed = observed;
    rec.weight = last_weight_;
    rec.v_weight = last_v_;
    sigma_ = update_sigma(sigma_, rec.phi_diff, rec.weight, params_.kappa);
    lambda_ = update_lambda_mat(lambda_, rec.phi_diff, rec.weight, rec.v_weight);
    history_.push_back(std::move(rec));
    theta_ = solve_weighted_mle(history_, mle_, link_, theta_);
    ++round_;
}

double RcdbsPolicy::sigma_norm_error(const Vec& theta_star) const {
    Vec diff(theta_.size());
    for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = theta_[j] - theta_star[j];
    return std::sqrt(sigma_.quad_form(diff));
}

// ---------------------------------------------------------------------------

PolicyKind policy_kind_from_string(const std::string& s) {
    if (s == "rcdb") return PolicyKind::Rcdb;
    if (s == "rcdbs") return PolicyKind::Rcdbs;
    if (s == "maxinp") return PolicyKind::MaxInp;
    if (s == "colstim") return PolicyKind::Colstim;
    if (s == "maxpairucb") return PolicyKind::MaxPairUcb;
    throw ConfigError("unknown policy kind: " + s);
}

std::string policy_kind_name(PolicyKind k) {
    switch (k) {
        case PolicyKind::Rcdb: return "rcdb";
        case PolicyKind::Rcdbs: return "rcdbs";
        case PolicyKind::MaxInp: return "maxinp";
        case PolicyKind::Colstim: return "colstim";
        case PolicyKind::MaxPairUcb: return "maxpairucb";
    }
    return "unknown";
}

std::unique_ptr<PairPolicy> make_policy(const PolicyConfig& cfg,
                                        const std::vector<Vec>& actions,
                                        const LinkSpec& link, int T, int d, double B,
                                        double delta) {
    const double kappa = kappa_for(link, B, 2.0);

    if (cfg.kind == PolicyKind::Rcdbs) {
        RcdbsParams p = derive_rcdbs_params(d, B, kappa, delta, cfg.c_bar);
        if (!std::isnan(cfg.lambda_override)) p.lambda = cfg.lambda_override;
        if (!std::isnan(cfg.alpha_override)) p.alpha = cfg.alpha_override;
        return std::make_unique<RcdbsPolicy>(actions, link, p, cfg.bonus_scale);
    }

    // baselines run the unweighted MLE with a C = 0 radius
    const int c = cfg.kind == PolicyKind::Rcdb ? cfg.c_bar : 0;
    RcdbParams p = derive_rcdb_params(T, d, B, kappa, delta, c);
    if (!std::isnan(cfg.lambda_override)) p.lambda = cfg.lambda_override;
    if (!std::isnan(cfg.alpha_override)) p.alpha = cfg.alpha_override;
    p.beta = std::isnan(cfg.beta_override) ? beta_rcdb(T, d, p) : cfg.beta_override;
    p.beta *= cfg.bonus_scale;

    SelectRule rule = SelectRule::Symmetric;
    if (cfg.kind == PolicyKind::MaxInp) rule = SelectRule::MaxInp;
    if (cfg.kind == PolicyKind::Colstim) rule = SelectRule::Colstim;
    return std::make_unique<GlmDuelPolicy>(actions, link, p, rule);
}

}  // namespace rcdb
