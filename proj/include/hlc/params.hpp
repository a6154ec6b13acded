#pragma once

#include "hlc/hypergraph.hpp"

#include <optional>

namespace hlc {

// H(x) = -x log2 x - (1-x) log2 (1-x), with H(0) = H(1) = 0.
// Throws std::domain_error outside [0, 1].
double binary_entropy(double x);

enum class Threshold {
    AlphaA,    // alpha = (1 - H(alpha)) / 3
    AlphaB,    // alpha = (1 - H(alpha)) / 2
    AlphaStar, // alpha = 1 - H(alpha)
    Alpha0,    // (1 - alpha) / 2 = 1 - H(alpha)
};

// Unique root of the defining equation in (0, 1/2), by bisection to 1e-9.
double solve_threshold(Threshold which);

// 2e(delta + 1) < 2^(alpha k), evaluated in the log domain.
bool check_degree_condition(int k, long delta, double alpha);

struct SecondaryConditions {
    bool alon;          //  4e delta^3 < 2^((1-H(alpha)) k)
    bool improved_alon; //  4e delta^2 < 2^((1-H(alpha)) k)
    bool main;          // 24e delta   < 2^((1-H(alpha)) k)
};
SecondaryConditions check_secondary_conditions(int k, long delta, double alpha);

// log2 of the failure-probability ingredients. P_M bounds the chance a fixed
// (1-alpha)k-vertex set is monochromatic, P_W that it is (1-alpha)k-one-sided;
// q = max(P_W, sqrt(P_M)). All clamped to probabilities (log2 <= 0).
struct ProbBounds {
    double log2_pm;
    double log2_pw;
    double log2_q;
};
ProbBounds prob_bounds(int k, double alpha);

// 6e delta q < 1/2.
bool witness_condition(long delta, int k, double alpha);

// ceil(2 k log2(max(2, m))): component size cap.
long comp_bound(int k, long m);

// ceil(2 log2(max(2, m))): coloring trial cap.
int trial_budget(long m);

// (k d)^(c+1) < e^-1 2^(k-1): whether a constant-exponent local simulation
// is within the failure budget.
bool agi_feasible(int k, int d, double c_exponent);

// Integer comparison thresholds. Counts are integers, so "count > t" and
// "count >= t" reduce to integer bounds; t within 1e-9 of an integer is
// treated as that integer, which keeps e.g. (1 - 0.3) * 10 at exactly 7.
long count_above(double t);    // least c with c > t
long count_at_least(double t); // least c with c >= t

// Shorthands for the three thresholds used throughout.
long bad_min_count(int k, double alpha);  // count_above((1-alpha) k)
long weak_min_count(int k, double alpha); // count_at_least((1-alpha) k)
long trim_min_count(int k, double alpha); // count_at_least(alpha k)

// Per-run parameter bundle. make() validates alpha in (0,1) with
// alpha*k >= 1 and derives the caps from the instance.
struct Params {
    int k = 0;
    double alpha = 0;
    int n = 0;
    long m = 0;
    long delta = 0;
    long component_cap = 0;
    int trials = 0;
    long search_budget = 100000;

    static Params make(const Hypergraph& h, double alpha,
                       std::optional<long> component_cap_override = std::nullopt);
};

} // namespace hlc
