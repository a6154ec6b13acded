#include "hlc/sweep.hpp"

#include <algorithm>
#include <chrono>

#include "hlc/generator.hpp"

namespace hlc {

RunRecord run_single(const RunSpec& spec) {
    auto t0 = std::chrono::steady_clock::now();
    Hypergraph h = generate_bounded_degree(spec.n, spec.k, spec.d, spec.seed);
    ColorTape tape(spec.seed, h.n);
    Params params = Params::make(h, spec.alpha, spec.cap_override);
    std::vector<int> order = spec.order == QueryOrder::Random
                                 ? random_order(h.n, tape)
                                 : ascending_order(h.n);
    RunOutcome out =
        run_complete(h, tape, params, order, spec.check, spec.time_queries);
    auto t1 = std::chrono::steady_clock::now();

    RunRecord rec;
    rec.stats = collect_stats(h, tape, params, out,
                              std::chrono::duration<double>(t1 - t0).count(),
                              spec.time_queries);
    rec.coloring = std::move(out.coloring);
    return rec;
}

std::vector<RunStats> run_sweep(const std::vector<RunSpec>& specs,
                                int threads) {
    std::vector<RunStats> stats(specs.size());
    // Exceptions (e.g. a generator refusing a spec) may not escape an OpenMP
    // region; capture the first one and rethrow it to the caller.
    std::exception_ptr error;
#ifdef _OPENMP
    bool failed = false;
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, threads)) \
    if (threads > 1)
    for (int i = 0; i < int(specs.size()); ++i) {
        bool skip;
#pragma omp atomic read
        skip = failed;
        if (skip) continue;
        try {
            stats[i] = run_single(specs[i]).stats;
        } catch (...) {
#pragma omp critical(hlc_sweep_error)
            if (!error) error = std::current_exception();
#pragma omp atomic write
            failed = true;
        }
    }
#else
    (void)threads;
    for (int i = 0; i < int(specs.size()) && !error; ++i) {
        try {
            stats[i] = run_single(specs[i]).stats;
        } catch (...) {
            error = std::current_exception();
        }
    }
#endif
    if (error) std::rethrow_exception(error);
    return stats;
}

} // namespace hlc
