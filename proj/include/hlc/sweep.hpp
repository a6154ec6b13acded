#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hlc/engine.hpp"
#include "hlc/stats.hpp"

namespace hlc {

enum class QueryOrder { Random, Ascending };

// One benchmark run: generate an instance, query every vertex, collect stats.
// The single seed drives the generator, the tape, and the query order.
struct RunSpec {
    int n = 0;
    int k = 0;
    int d = 0;
    double alpha = 0;
    std::uint64_t seed = 0;
    QueryOrder order = QueryOrder::Random;
    std::optional<long> cap_override;
    CheckConfig check;
    bool time_queries = false;
};

struct RunRecord {
    RunStats stats;
    std::vector<Color> coloring; // empty unless the run succeeded
};

RunRecord run_single(const RunSpec& spec);

// Runs every spec and returns stats in spec order. threads > 1 distributes
// runs across OpenMP threads; all non-timing fields match the serial run.
std::vector<RunStats> run_sweep(const std::vector<RunSpec>& specs, int threads);

} // namespace hlc
