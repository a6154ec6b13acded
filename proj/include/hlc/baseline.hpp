#pragma once

#include <vector>

#include "hlc/hypergraph.hpp"
#include "hlc/params.hpp"
#include "hlc/tape.hpp"

namespace hlc {

// Connected components of the alpha-bad edges under the tape's initial
// coloring: sorted vertex sets, ordered by minimum vertex id.
std::vector<std::vector<int>> bad_components(const Hypergraph& h,
                                             const ColorTape& tape,
                                             double alpha);

// Merges any two components intersected by a common edge, to fixpoint.
// Afterwards no edge of h meets two of the returned sets. Input sets must be
// pairwise disjoint; output keeps the sorted/min-id ordering convention.
std::vector<std::vector<int>> merge_components(
    const Hypergraph& h, const std::vector<std::vector<int>>& comps);

struct AlonStats {
    long bad_edges = 0;
    long components_before_merge = 0;
    long components = 0;
    long largest_component = 0;
    long trimmed_edges = 0;
    long resample_steps = 0;
    long random_bits = 0;
    bool degree_condition_ok = true;
};

struct AlonResult {
    std::vector<Color> coloring;
    bool success = false;
    int failed_component = -1; // lowest component index that exhausted trials
    AlonStats stats;
};

// Batch two-phase coloring: cut the bad components and merge them, then per
// component trim every edge not already properly colored by its outside part
// and resample the trimmed system on that component's own bit streams.
// Non-component vertices keep their initial colors. threads > 1 recolors
// components in parallel with output identical to the serial run.
AlonResult alon_color(const Hypergraph& h, const ColorTape& tape,
                      const Params& params, int threads = 1);

} // namespace hlc
