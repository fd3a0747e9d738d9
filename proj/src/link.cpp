#include "rcdb/link.hpp"

#include <cmath>

namespace rcdb {

namespace {

double sigmoid_value(double x) {
    // split at 0 so the exponential never overflows
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

double sigmoid_derivative(double x) {
    const double p = sigmoid_value(x);
    return p * (1.0 - p);
}

double piecewise_value(double x) {
    if (x < -0.5) return 0.0;
    if (x > 0.5) return 1.0;
    return 0.5 + x;
}

double piecewise_derivative(double x) {
    // one-sided at the endpoints: slope 1 on the closed interval
    return (x >= -0.5 && x <= 0.5) ? 1.0 : 0.0;
}

double base_value(LinkKind k, double x) {
    return k == LinkKind::Sigmoid ? sigmoid_value(x) : piecewise_value(x);
}

double base_derivative(LinkKind k, double x) {
    return k == LinkKind::Sigmoid ? sigmoid_derivative(x) : piecewise_derivative(x);
}

}  // namespace

LinkSpec LinkSpec::scaled(LinkKind inner_kind, double s) {
    if (!(s > 0.0) || !std::isfinite(s))
        throw ConfigError("scaled link: scale must be finite and positive");
    if (inner_kind == LinkKind::Scaled)
        throw ConfigError("scaled link: nesting depth exceeds 1");
    return {LinkKind::Scaled, inner_kind, s};
}

double link_value(const LinkSpec& s, double x) {
    if (s.kind == LinkKind::Scaled) return base_value(s.inner, s.scale * x);
    return base_value(s.kind, x);
}

double link_derivative(const LinkSpec& s, double x) {
    if (s.kind == LinkKind::Scaled) return s.scale * base_derivative(s.inner, s.scale * x);
    return base_derivative(s.kind, x);
}

double kappa_for(const LinkSpec& s, double B, double feat_diff_bound) {
    const double xmax = feat_diff_bound * B;
    const LinkKind k = s.kind == LinkKind::Scaled ? s.inner : s.kind;
    const double sc = s.kind == LinkKind::Scaled ? s.scale : 1.0;
    if (k == LinkKind::PiecewiseLinear) {
        if (sc * xmax > 0.5)
            throw DomainExceedsLinearRegion(
                "kappa_for: piecewise-linear link leaves [-1/2,1/2] at |x| = " +
                std::to_string(sc * xmax));
        return sc;
    }
    // logistic derivative is even and decreasing in |x|: minimum at the endpoint
    return sc * sigmoid_derivative(sc * xmax);
}

std::string link_name(const LinkSpec& s) {
    switch (s.kind) {
        case LinkKind::Sigmoid: return "sigmoid";
        case LinkKind::PiecewiseLinear: return "piecewise_linear";
        case LinkKind::Scaled:
            return "scaled(" + std::string(s.inner == LinkKind::Sigmoid
                                               ? "sigmoid"
                                               : "piecewise_linear") +
                   ", " + std::to_string(s.scale) + ")";
    }
    return "unknown";
}

}  // namespace rcdb
