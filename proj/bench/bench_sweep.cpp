// Times the same benchmark sweep executed serially and with OpenMP workers,
// prints a comparison table, and fails if the parallel stats diverge from the
// serial reference (timing fields excluded).
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hlc/stats.hpp"
#include "hlc/sweep.hpp"

namespace {

std::string comparable(hlc::RunStats s) {
    s.total_seconds = 0;
    s.query_ns.reset();
    return hlc::stats_to_json(s);
}

double time_sweep(const std::vector<hlc::RunSpec>& specs, int threads,
                  std::vector<hlc::RunStats>& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = hlc::run_sweep(specs, threads);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int n = 2000, k = 16, d = 3, seeds = 8;
    double alpha = 0.3;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (!std::strcmp(argv[i], "--n")) n = std::atoi(argv[i + 1]);
        else if (!std::strcmp(argv[i], "--k")) k = std::atoi(argv[i + 1]);
        else if (!std::strcmp(argv[i], "--d")) d = std::atoi(argv[i + 1]);
        else if (!std::strcmp(argv[i], "--seeds")) seeds = std::atoi(argv[i + 1]);
        else if (!std::strcmp(argv[i], "--alpha")) alpha = std::atof(argv[i + 1]);
    }

    std::vector<hlc::RunSpec> specs;
    for (int s = 0; s < seeds; ++s) {
        hlc::RunSpec spec;
        spec.n = n;
        spec.k = k;
        spec.d = d;
        spec.alpha = alpha;
        spec.seed = std::uint64_t(1000 + s);
        specs.push_back(spec);
    }

    int workers = 1;
#ifdef _OPENMP
    workers = omp_get_max_threads();
#endif

    std::vector<hlc::RunStats> serial, parallel;
    double t_serial = time_sweep(specs, 1, serial);
    double t_parallel = time_sweep(specs, workers, parallel);

    std::printf("sweep: %d runs, n=%d k=%d d=%d alpha=%.3f\n",
                int(specs.size()), n, k, d, alpha);
    std::printf("%-10s %8s %10s\n", "mode", "threads", "seconds");
    std::printf("%-10s %8d %10.3f\n", "serial", 1, t_serial);
    std::printf("%-10s %8d %10.3f\n", "openmp", workers, t_parallel);
    std::printf("speedup: %.2fx\n", t_parallel > 0 ? t_serial / t_parallel : 0);

    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (comparable(serial[i]) != comparable(parallel[i])) {
            std::printf("MISMATCH at run %zu\n", i);
            return 1;
        }
    }
    std::printf("serial and parallel sweeps agree on all %zu runs\n",
                specs.size());
    return 0;
}
