#pragma once

#include "hlc/hypergraph.hpp"
#include "hlc/params.hpp"
#include "hlc/tape.hpp"

#include <optional>

namespace hlc {

// Potential resample structure: base edge plus an ordered list of witnessing
// neighbor edges. Valid when (1) the base minus all witnesses is
// monochromatic with at least (1-alpha)k vertices under the initial coloring,
// and (2) each witness minus its predecessors has at least (1-alpha)k
// vertices of one color. An initially monochromatic base with no witnesses
// is the degenerate valid case.
struct Structure {
    int base;
    std::vector<int> witnesses;
};

struct SearchDiag {
    long nodes_visited = 0;
    long budget_exhausted = 0;
    long found = 0;
};

// More than (1-alpha)k vertices of f share one initial color.
bool is_alpha_bad(const Hypergraph& h, const ColorTape& tape, double alpha,
                  int f);

// All vertices of the base and witnesses, sorted, deduplicated.
std::vector<int> structure_vertices(const Hypergraph& h, const Structure& s);

bool validate_structure(const Hypergraph& h, const ColorTape& tape,
                        double alpha, const Structure& s);

// Deterministic bounded search for a valid structure containing v whose
// vertex set avoids `blocked` (completed components). Base candidates are
// the edges incident to v in ascending id order; witnesses are explored in
// ascending id order, each required to cover a not-yet-covered vertex of the
// base's minority color. Sound (results validate); completeness is bounded
// by params.search_budget and monitored through diag.
std::optional<Structure> find_structure_containing(
    const Hypergraph& h, const ColorTape& tape, const Params& params, int v,
    const std::vector<char>& blocked, SearchDiag* diag = nullptr);

// Same search, for a structure at distance exactly 1 from the in-progress
// component: vertex set disjoint from comp and blocked, with some edge
// intersecting both comp and the structure. Base candidates are the edges
// within distance 2 of comp.
std::optional<Structure> find_structure_near(
    const Hypergraph& h, const ColorTape& tape, const Params& params,
    const std::vector<char>& comp, const std::vector<char>& blocked,
    SearchDiag* diag = nullptr);

// Lowest-id edge f not contained in comp whose part outside comp is
// monochromatic with at least (1-alpha)k vertices.
std::optional<int> find_mono_tail(const Hypergraph& h, const ColorTape& tape,
                                  double alpha, const std::vector<char>& comp);

} // namespace hlc
