#pragma once

#include "hlc/hypergraph.hpp"
#include "hlc/params.hpp"
#include "hlc/tape.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hlc {

// Role of an edge in a component build trace: Witness for witnessing edges of
// an absorbed structure, Mono for structure bases and mono-tails.
enum class TraceRole { Witness, Mono };
using Trace = std::vector<std::pair<int, TraceRole>>;

enum class NodeLabel { M, W, J };

struct WitnessNode {
    int edge;             // edge id in the parent hypergraph
    NodeLabel label;
    std::vector<int> out; // node indices this node points to (toward roots)
    int depth;            // longest directed path to a root; fixed at insertion
};

struct WitnessTree {
    std::vector<WitnessNode> nodes;
    int count(NodeLabel l) const {
        int c = 0;
        for (const auto& n : nodes)
            if (n.label == l) ++c;
        return c;
    }
};

// Nodes in trace order. Each new node points, in every connected part of the
// forest it intersects, to the deepest node whose edge meets the new edge
// (lowest node index on ties); an edge disjoint from everything so far
// becomes a root.
WitnessTree build_witness_forest(const Hypergraph& h, const Trace& trace);

struct WitnessJoinError : std::runtime_error {
    int remaining;
    explicit WitnessJoinError(int remaining_)
        : std::runtime_error("join_forest: " + std::to_string(remaining_) +
                             " subcomponents have no bridging edge"),
          remaining(remaining_) {}
};

// Connects a multi-root forest into one tree by inserting J-labeled nodes on
// bridging edges (lowest qualifying edge id first). Throws WitnessJoinError
// if more than one subcomponent remains and no edge intersects two of them.
WitnessTree join_forest(const Hypergraph& h, WitnessTree forest);

struct ProperReport {
    bool proper = true;
    std::string violation; // empty when proper
};

// Definition of a proper tree: (i) more M nodes than J nodes, (ii) M/W nodes
// of equal depth carry pairwise disjoint edges, (iii) every M/W node keeps
// strictly more than (1-alpha)k vertices outside edges of smaller depth.
ProperReport is_proper(const Hypergraph& h, double alpha,
                       const WitnessTree& t);

// Conjunction over M/W nodes of the node events under the tape's initial
// coloring: an M node's kept vertex set is monochromatic, a W node's kept
// set has at least (1-alpha)k vertices of one color. J nodes are ignored.
bool event_holds(const Hypergraph& h, const ColorTape& tape, double alpha,
                 const WitnessTree& t);

struct EventBound {
    double log2_product; // N_W * log2(P_W) + N_M * log2(P_M)
    double log2_qu;      // u * log2(q), u = total node count
};
EventBound event_prob_bound(const WitnessTree& t, const ProbBounds& b);

// Number of subtrees with u nodes containing the root of the infinite tree
// in which every node has `delta` children: C(delta*u, u) / ((delta-1)u + 1),
// computed exactly. Throws std::overflow_error if the value (or an
// intermediate) exceeds the return type. Requires delta >= 2, u >= 1.
unsigned long long count_rooted_subtrees(int delta, int u);

// log2 of 2m(6e*delta*q)^u with u = 2 log2(m): the failure probability that
// any witness tree of size >= u has all its events hold. Empty when
// witness_condition fails (the geometric series diverges).
std::optional<double> union_bound_failure(const Params& params,
                                          const ProbBounds& b);

} // namespace hlc
