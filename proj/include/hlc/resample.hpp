#pragma once

#include "hlc/hypergraph.hpp"
#include "hlc/tape.hpp"

#include <vector>

namespace hlc {

// Edge system a resampler runs on: vertices 0..num_vertices-1, edges as
// sorted local-vertex lists. Edges may have fewer than k vertices (trimmed
// instances); a single-vertex edge is permanently monochromatic.
struct ResampleProblem {
    int num_vertices = 0;
    std::vector<std::vector<int>> edges;
};

ResampleProblem problem_from(const Hypergraph& h);

struct ResampleResult {
    std::vector<Color> coloring;
    bool success = false;
    long steps_used = 0;
    std::vector<long> resamples_per_edge;
    std::vector<int> step_edges; // edge picked at each step, in order
};

// Repeatedly redraws the lowest-id monochromatic edge until none remains or
// max_steps redraws have been spent. Never reports success while a
// monochromatic edge exists.
ResampleResult mt_resample(const ResampleProblem& p,
                           const std::vector<Color>& init, long max_steps,
                           BitStream& bits);

struct ConservativeResult {
    ResampleResult result;
    std::vector<char> resampled; // vertices redrawn at least once
};

// Variant that starts from the tape's initial coloring and, on a
// monochromatic edge, redraws the whole edge only while more than
// (1-alpha)k of its vertices are still fresh (never redrawn); otherwise it
// redraws only the stale part. alpha = 1 reproduces mt_resample exactly.
ConservativeResult conservative_resample(const Hypergraph& h, double alpha,
                                         const ColorTape& tape, long max_steps,
                                         BitStream& bits);

} // namespace hlc
