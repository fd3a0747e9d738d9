#pragma once

#include <string>

#include "rcdb/errors.hpp"

namespace rcdb {

enum class LinkKind { Sigmoid, PiecewiseLinear, Scaled };

// Link function sigma mapping a reward gap to a win probability,
// with sigma(x) + sigma(-x) = 1. "Scaled" wraps an inner link as
// sigma_s(x) = inner(s * x); nesting depth is at most one.
struct LinkSpec {
    LinkKind kind = LinkKind::Sigmoid;
    LinkKind inner = LinkKind::Sigmoid;  // used when kind == Scaled
    double scale = 1.0;

    static LinkSpec sigmoid() { return {LinkKind::Sigmoid, LinkKind::Sigmoid, 1.0}; }
    static LinkSpec piecewise_linear() {
        return {LinkKind::PiecewiseLinear, LinkKind::Sigmoid, 1.0};
    }
    static LinkSpec scaled(LinkKind inner_kind, double s);
};

double link_value(const LinkSpec& s, double x);
double link_derivative(const LinkSpec& s, double x);

// Minimum of link_derivative over |x| <= feat_diff_bound * B.
// For the piecewise-linear link this throws DomainExceedsLinearRegion
// when the range leaves [-1/2, 1/2].
double kappa_for(const LinkSpec& s, double B, double feat_diff_bound);

std::string link_name(const LinkSpec& s);

}  // namespace rcdb
