#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hlc/hypergraph.hpp"
#include "hlc/tape.hpp"

namespace hlc {

struct ProperCheck {
    bool proper = false;
    std::vector<int> violating; // ids of monochromatic edges, ascending
};

// Total-coloring check; throws std::invalid_argument on a partial coloring.
ProperCheck is_proper_coloring(const Hypergraph& h,
                               const std::vector<Color>& coloring);

// Completion-time edge partition relative to the resampled components:
//   E1 — disjoint from every component
//   E2 — meets one component in fewer than alpha*k vertices
//   E3 — meets one component in at least alpha*k vertices
enum class EdgeClass { E1, E2, E3 };

// Raised when the partition is ill-defined: an edge meets two components
// (component separation broken) or the component sets overlap.
struct AuditError : std::runtime_error {
    int edge;
    AuditError(int edge_, const std::string& what_)
        : std::runtime_error(what_), edge(edge_) {}
};

std::vector<EdgeClass> classify_edges(const Hypergraph& h,
                                      const std::vector<std::vector<int>>& components,
                                      double alpha);

// Exhaustive 2^n oracle (n <= 26): returns the lexicographically first proper
// coloring (vertex 0 most significant, Red < Blue), or nullopt if none exists.
std::optional<std::vector<Color>> exhaustive_two_colorable(const Hypergraph& h);

} // namespace hlc
