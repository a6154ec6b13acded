#include "hlc/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hlc {

namespace {

constexpr double kE = 2.718281828459045235360287471352662498;

bool edges_intersect(const Hypergraph& h, int a, int b) {
    const auto& ea = h.edges[a];
    const auto& eb = h.edges[b];
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i] == eb[j]) return true;
        if (ea[i] < eb[j])
            ++i;
        else
            ++j;
    }
    return false;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// For each connected part of the forest that `edge` intersects, the deepest
// intersecting node (lowest index on ties). Returns pairs (root, node index).
std::vector<std::pair<int, int>> attach_targets(const Hypergraph& h,
                                                const WitnessTree& t,
                                                UnionFind& uf, int edge) {
    std::vector<std::pair<int, int>> best; // (root, node)
    for (int i = 0; i < int(t.nodes.size()); ++i) {
        if (!edges_intersect(h, edge, t.nodes[i].edge)) continue;
        int root = uf.find(i);
        auto it = std::find_if(best.begin(), best.end(),
                               [&](const auto& p) { return p.first == root; });
        if (it == best.end()) {
            best.push_back({root, i});
        } else if (t.nodes[i].depth > t.nodes[it->second].depth) {
            it->second = i;
        }
    }
    return best;
}

} // namespace

WitnessTree build_witness_forest(const Hypergraph& h, const Trace& trace) {
    WitnessTree t;
    UnionFind uf(int(trace.size()));
    for (const auto& [edge, role] : trace) {
        if (edge < 0 || edge >= h.m)
            throw std::invalid_argument("build_witness_forest: bad edge id " +
                                        std::to_string(edge));
        int idx = int(t.nodes.size());
        WitnessNode node;
        node.edge = edge;
        node.label = role == TraceRole::Mono ? NodeLabel::M : NodeLabel::W;
        node.depth = 0;
        auto targets = attach_targets(h, t, uf, edge);
        for (const auto& [root, at] : targets) {
            node.out.push_back(at);
            node.depth = std::max(node.depth, t.nodes[at].depth + 1);
        }
        t.nodes.push_back(std::move(node));
        for (const auto& [root, at] : targets) uf.unite(at, idx);
    }
    return t;
}

WitnessTree join_forest(const Hypergraph& h, WitnessTree forest) {
    while (true) {
        UnionFind uf(int(forest.nodes.size()));
        for (int i = 0; i < int(forest.nodes.size()); ++i)
            for (int j : forest.nodes[i].out) uf.unite(i, j);
        std::vector<int> roots;
        for (int i = 0; i < int(forest.nodes.size()); ++i)
            if (uf.find(i) == i) roots.push_back(i);
        // Count distinct parts.
        std::vector<int> parts;
        for (int i = 0; i < int(forest.nodes.size()); ++i) {
            int r = uf.find(i);
            if (std::find(parts.begin(), parts.end(), r) == parts.end())
                parts.push_back(r);
        }
        if (parts.size() <= 1) return forest;

        int pick = -1;
        for (int f = 0; f < h.m && pick < 0; ++f) {
            auto targets = attach_targets(h, forest, uf, f);
            if (targets.size() >= 2) pick = f;
        }
        if (pick < 0) throw WitnessJoinError(int(parts.size()));

        auto targets = attach_targets(h, forest, uf, pick);
        WitnessNode node;
        node.edge = pick;
        node.label = NodeLabel::J;
        node.depth = 0;
        for (const auto& [root, at] : targets) {
            node.out.push_back(at);
            node.depth = std::max(node.depth, forest.nodes[at].depth + 1);
        }
        forest.nodes.push_back(std::move(node));
    }
}

ProperReport is_proper(const Hypergraph& h, double alpha,
                       const WitnessTree& t) {
    int nm = t.count(NodeLabel::M);
    int nj = t.count(NodeLabel::J);
    if (nm <= nj)
        return {false, "M nodes (" + std::to_string(nm) +
                           ") do not outnumber J nodes (" + std::to_string(nj) + ")"};

    int max_depth = 0;
    for (const auto& n : t.nodes) max_depth = std::max(max_depth, n.depth);

    // (ii) same-depth M/W nodes have pairwise disjoint edges.
    for (int d = 0; d <= max_depth; ++d) {
        std::vector<char> seen(h.n, 0);
        for (int i = 0; i < int(t.nodes.size()); ++i) {
            const auto& n = t.nodes[i];
            if (n.depth != d || n.label == NodeLabel::J) continue;
            for (int v : h.edges[n.edge]) {
                if (seen[v])
                    return {false, "depth " + std::to_string(d) +
                                       " nodes share vertex " + std::to_string(v)};
                seen[v] = 1;
            }
        }
    }

    // (iii) |w(x)| > (1-alpha)k against vertices of strictly smaller depth.
    long strict_min = bad_min_count(h.k, alpha);
    std::vector<std::vector<char>> below(max_depth + 1,
                                         std::vector<char>(h.n, 0));
    for (const auto& n : t.nodes)
        for (int d = n.depth + 1; d <= max_depth; ++d)
            for (int v : h.edges[n.edge]) below[d][v] = 1;
    for (int i = 0; i < int(t.nodes.size()); ++i) {
        const auto& n = t.nodes[i];
        if (n.label == NodeLabel::J) continue;
        long kept = 0;
        for (int v : h.edges[n.edge])
            if (!below[n.depth][v]) ++kept;
        if (kept < strict_min)
            return {false, "node " + std::to_string(i) + " keeps " +
                               std::to_string(kept) + " vertices, needs > (1-alpha)k"};
    }
    return {};
}

bool event_holds(const Hypergraph& h, const ColorTape& tape, double alpha,
                 const WitnessTree& t) {
    long weak_min = weak_min_count(h.k, alpha);
    int max_depth = 0;
    for (const auto& n : t.nodes) max_depth = std::max(max_depth, n.depth);
    std::vector<std::vector<char>> below(max_depth + 1,
                                         std::vector<char>(h.n, 0));
    for (const auto& n : t.nodes)
        for (int d = n.depth + 1; d <= max_depth; ++d)
            for (int v : h.edges[n.edge]) below[d][v] = 1;
    for (const auto& n : t.nodes) {
        if (n.label == NodeLabel::J) continue;
        long red = 0, blue = 0;
        for (int v : h.edges[n.edge]) {
            if (below[n.depth][v]) continue;
            (tape.initial_color(v) == Color::Red ? red : blue)++;
        }
        long kept = red + blue;
        if (n.label == NodeLabel::M) {
            if (kept == 0 || (red != kept && blue != kept)) return false;
        } else {
            if (std::max(red, blue) < weak_min) return false;
        }
    }
    return true;
}

EventBound event_prob_bound(const WitnessTree& t, const ProbBounds& b) {
    int nm = t.count(NodeLabel::M);
    int nw = t.count(NodeLabel::W);
    int u = int(t.nodes.size());
    return EventBound{nw * b.log2_pw + nm * b.log2_pm, u * b.log2_q};
}

unsigned long long count_rooted_subtrees(int delta, int u) {
    if (delta < 2 || u < 1)
        throw std::invalid_argument("count_rooted_subtrees: need delta >= 2, u >= 1");
    // C(delta*u, u) via incremental multiply/divide; exact at every step.
    unsigned __int128 num = 1;
    const unsigned __int128 cap = ~(unsigned __int128)(0);
    for (int i = 1; i <= u; ++i) {
        unsigned long long factor = (unsigned long long)(delta) * u - u + i;
        if (num > cap / factor) throw std::overflow_error("count_rooted_subtrees");
        num = num * factor / i; // product of i consecutive terms divisible by i!
    }
    unsigned __int128 den = (unsigned __int128)(delta - 1) * u + 1;
    if (num % den != 0) throw std::logic_error("count_rooted_subtrees: non-integer");
    num /= den;
    if (num > (unsigned __int128)(~0ULL)) throw std::overflow_error("count_rooted_subtrees");
    return (unsigned long long)(num);
}

std::optional<double> union_bound_failure(const Params& params,
                                          const ProbBounds& b) {
    if (!witness_condition(params.delta, params.k, params.alpha))
        return std::nullopt;
    double u = 2 * std::log2(double(std::max<long>(2, params.m)));
    double per_node = params.delta == 0
                          ? -std::numeric_limits<double>::infinity()
                          : std::log2(6 * kE * double(params.delta)) + b.log2_q;
    return 1 + std::log2(double(std::max<long>(2, params.m))) + u * per_node;
}

} // namespace hlc
