#include "hlc/params.hpp"

#include <cmath>
#include <stdexcept>

namespace hlc {

namespace {

constexpr double kE = 2.718281828459045235360287471352662498;

double threshold_residual(Threshold which, double a) {
    double h = binary_entropy(a);
    switch (which) {
        case Threshold::AlphaA: return 3 * a - (1 - h);
        case Threshold::AlphaB: return 2 * a - (1 - h);
        case Threshold::AlphaStar: return a - (1 - h);
        case Threshold::Alpha0: return (1 - a) / 2 - (1 - h);
    }
    throw std::logic_error("solve_threshold: unknown threshold");
}

} // namespace

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("binary_entropy: argument outside [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

double solve_threshold(Threshold which) {
    // Each residual is negative at 0+ and positive at 1/2, with a single sign
    // change in between.
    double lo = 1e-12, hi = 0.5 - 1e-12;
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        double mid = 0.5 * (lo + hi);
        if (threshold_residual(which, mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

bool check_degree_condition(int k, long delta, double alpha) {
    // 2e(delta+1) < 2^(alpha k)
    return std::log2(2 * kE * double(delta + 1)) < alpha * k;
}

SecondaryConditions check_secondary_conditions(int k, long delta, double alpha) {
    double rhs = (1 - binary_entropy(alpha)) * k;
    double d = double(delta);
    auto below = [&](double lhs_factor, double power) {
        if (delta == 0) return true; // left side is zero
        return std::log2(lhs_factor) + power * std::log2(d) < rhs;
    };
    return SecondaryConditions{
        below(4 * kE, 3),
        below(4 * kE, 2),
        below(24 * kE, 1),
    };
}

ProbBounds prob_bounds(int k, double alpha) {
    double log2_pm = std::min(0.0, 1 - (1 - alpha) * k);
    double log2_pw = std::min(0.0, 1 - (1 - binary_entropy(alpha)) * k);
    return ProbBounds{log2_pm, log2_pw, std::max(log2_pw, log2_pm / 2)};
}

bool witness_condition(long delta, int k, double alpha) {
    if (delta == 0) return true;
    ProbBounds b = prob_bounds(k, alpha);
    return std::log2(6 * kE * double(delta)) + b.log2_q < -1.0;
}

long comp_bound(int k, long m) {
    double v = 2.0 * k * std::log2(double(std::max<long>(2, m)));
    return count_at_least(v);
}

int trial_budget(long m) {
    double v = 2.0 * std::log2(double(std::max<long>(2, m)));
    return int(std::max<long>(1, count_at_least(v)));
}

bool agi_feasible(int k, int d, double c_exponent) {
    // (k d)^(c+1) < e^-1 2^(k-1)
    double lhs = (c_exponent + 1) * std::log2(double(k) * d);
    double rhs = (k - 1) - std::log2(kE);
    return lhs < rhs;
}

long count_above(double t) {
    double r = std::round(t);
    if (std::abs(t - r) < 1e-9) return long(r) + 1;
    return long(std::floor(t)) + 1;
}

long count_at_least(double t) {
    double r = std::round(t);
    if (std::abs(t - r) < 1e-9) return long(r);
    return long(std::ceil(t));
}

long bad_min_count(int k, double alpha) { return count_above((1 - alpha) * k); }
long weak_min_count(int k, double alpha) { return count_at_least((1 - alpha) * k); }
long trim_min_count(int k, double alpha) { return count_at_least(alpha * k); }

Params Params::make(const Hypergraph& h, double alpha,
                    std::optional<long> component_cap_override) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("params: alpha must lie in (0, 1)");
    if (alpha * h.k < 1.0 - 1e-9)
        throw std::invalid_argument("params: alpha * k must be at least 1");
    Params p;
    p.k = h.k;
    p.alpha = alpha;
    p.n = h.n;
    p.m = h.m;
    p.delta = h.delta;
    p.component_cap = component_cap_override.value_or(comp_bound(h.k, h.m));
    p.trials = trial_budget(h.m);
    if (p.component_cap < h.k)
        throw std::invalid_argument("params: component cap below k");
    return p;
}

} // namespace hlc
