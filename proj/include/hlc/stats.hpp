#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hlc/engine.hpp"
#include "hlc/hypergraph.hpp"
#include "hlc/params.hpp"

namespace hlc {

// Nearest-rank percentiles: the ceil(p/100 * N)-th smallest sample.
struct QuantileSummary {
    long p50 = 0;
    long p90 = 0;
    long p99 = 0;
};
QuantileSummary quantiles(std::vector<long> samples);

struct RunStats {
    // Instance summary.
    int n = 0;
    long m = 0;
    int k = 0;
    long delta = 0;
    // Run parameters.
    double alpha = 0;
    std::uint64_t seed = 0;
    long comp_bound = 0;
    int trial_budget = 0;
    // Counters.
    long num_bad_edges = 0;
    EngineCounters counters;
    bool success = false;
    std::optional<Failure> failure;
    // Timing.
    double total_seconds = 0;
    std::optional<QuantileSummary> query_ns; // set when queries were timed
};

// Assembles RunStats from a finished complete run; quantiles are filled in
// when the run timed its queries.
RunStats collect_stats(const Hypergraph& h, const ColorTape& tape,
                       const Params& params, const RunOutcome& out,
                       double total_seconds, bool timed);

// Single-line JSON with sorted keys; identical stats serialize identically.
std::string stats_to_json(const RunStats& s);

} // namespace hlc
