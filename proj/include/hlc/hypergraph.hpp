#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hlc {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

// k-uniform hypergraph on vertices 0..n-1. Edges are sorted vertex lists in
// id order; incidence lists are sorted edge ids. delta is the maximum edge
// degree: the largest number of other edges any single edge intersects.
struct Hypergraph {
    int n = 0;
    int m = 0;
    int k = 0;
    std::vector<std::vector<int>> edges;
    std::vector<std::vector<int>> incidence;
    long delta = 0;
};

// Builds incidence and delta, and validates: k-uniformity, vertex range,
// no duplicate vertex within an edge, no duplicate edge, no isolated vertex.
// Throws std::invalid_argument on violations. `threads` <= 1 runs the
// edge-degree kernel serially.
Hypergraph make_hypergraph(int n, int k, std::vector<std::vector<int>> edges,
                           int threads = 1);

// Text format:
//   c <comment>
//   p khyp <n> <m> <k>
//   e <v1> ... <vk>        (m lines, 0-based vertex ids)
// Throws ParseError with a 1-based line number on malformed input.
Hypergraph parse_hypergraph(std::string_view text, int threads = 1);

// Canonical form: header line, then edges in id order with sorted vertices.
// parse(serialize(h)) reproduces h byte-for-byte under re-serialization.
std::string serialize_hypergraph(const Hypergraph& h);

// Sorted ids of edges sharing at least one vertex with edge f (f excluded).
std::vector<int> neighbors(const Hypergraph& h, int f);

// Maximum edge degree recomputed from scratch; the value stored in `delta`.
long max_edge_degree(const Hypergraph& h, int threads = 1);

} // namespace hlc
