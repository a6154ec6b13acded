#include "hlc/generator.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace hlc {

namespace {

// Self-contained splitmix64 stream; std::shuffle is implementation-defined,
// so the shuffle below is spelled out to keep instances identical across
// toolchains.
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t x = (state += 0x9e3779b97f4a7c15ULL);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    }
    // Unbiased draw from [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
        std::uint64_t x;
        do x = next();
        while (x >= limit);
        return x % bound;
    }
};

void fisher_yates(std::vector<int>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng.below(i)]);
}

} // namespace

Hypergraph generate_bounded_degree(int n, int k, int d, std::uint64_t seed,
                                   int threads) {
    if (n < 1 || k < 1 || d < 1)
        throw std::invalid_argument("generate: n, k, d must be >= 1");
    if (k > n)
        throw std::invalid_argument("generate: k > n, no k-uniform edge exists");
    if (std::int64_t(n) * d < k)
        throw std::invalid_argument("generate: slot budget n*d below k");

    Rng rng{seed * 0x9e3779b97f4a7c15ULL + 0x6a09e667f3bcc909ULL};

    std::vector<int> slots;
    slots.reserve(std::size_t(n) * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) slots.push_back(v);
    fisher_yates(slots, rng);

    std::vector<int> degree(n, 0);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> edges;

    auto emit = [&](std::vector<int> e) {
        std::sort(e.begin(), e.end());
        if (!seen.insert(e).second) return false;
        for (int v : e) ++degree[v];
        edges.push_back(std::move(e));
        return true;
    };

    // Cut phase: walk shuffled slots, deferring a slot whose vertex already
    // sits in the edge under construction; deferred slots rejoin the walk
    // after each emitted edge, so they can serve a later edge.
    std::deque<int> pending(slots.begin(), slots.end());
    std::vector<int> partial, deferred, in_partial(n, 0);
    while (!pending.empty()) {
        int v = pending.front();
        pending.pop_front();
        if (in_partial[v]) {
            deferred.push_back(v);
            continue;
        }
        in_partial[v] = 1;
        partial.push_back(v);
        if (int(partial.size()) == k) {
            emit(partial);
            for (int u : partial) in_partial[u] = 0;
            partial.clear();
            pending.insert(pending.begin(), deferred.begin(), deferred.end());
            deferred.clear();
        }
    }
    for (int u : partial) in_partial[u] = 0;

    // Repair phase: every uncovered vertex must land in an edge. Pack as many
    // uncovered vertices as fit, then fill from covered vertices with spare
    // degree budget, lowest current degree first.
    std::vector<int> uncovered;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 0) uncovered.push_back(v);

    while (!uncovered.empty()) {
        std::vector<int> e(uncovered.begin(),
                           uncovered.begin() + std::min<std::size_t>(k, uncovered.size()));
        if (int(e.size()) < k) {
            std::vector<int> fill;
            for (int v = 0; v < n; ++v)
                if (degree[v] > 0 && degree[v] < d) fill.push_back(v);
            std::stable_sort(fill.begin(), fill.end(),
                             [&](int a, int b) { return degree[a] < degree[b]; });
            if (int(e.size() + fill.size()) < k)
                throw std::invalid_argument(
                    "generate: cannot cover every vertex within the degree bound");
            // A rotation over fill candidates sidesteps the rare duplicate of
            // an existing edge.
            std::size_t need = std::size_t(k) - e.size();
            bool placed = false;
            for (std::size_t off = 0; off + need <= fill.size() && !placed; ++off) {
                std::vector<int> cand = e;
                for (std::size_t i = 0; i < need; ++i) cand.push_back(fill[off + i]);
                placed = emit(cand);
            }
            if (!placed)
                throw std::invalid_argument(
                    "generate: cannot cover every vertex without duplicating an edge");
        } else {
            if (!emit(e))
                throw std::invalid_argument(
                    "generate: cannot cover every vertex without duplicating an edge");
        }
        std::erase_if(uncovered, [&](int v) { return degree[v] > 0; });
    }

    return make_hypergraph(n, k, std::move(edges), threads);
}

} // namespace hlc
