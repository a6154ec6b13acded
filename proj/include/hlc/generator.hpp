#pragma once

#include "hlc/hypergraph.hpp"

#include <cstdint>

namespace hlc {

// Random k-uniform hypergraph in which every vertex lies in at least one and
// at most d edges. Greedy slot cutting plus a repair pass for vertices the
// cut missed; heuristic, so m and delta are whatever the construction
// achieves (delta <= k*(d-1) always). Deterministic for fixed arguments.
// Throws std::invalid_argument when no edge set can satisfy the slot budget.
Hypergraph generate_bounded_degree(int n, int k, int d, std::uint64_t seed,
                                   int threads = 1);

} // namespace hlc
