#include "hlc/resample.hpp"

#include "hlc/params.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hlc {

namespace {

bool monochromatic(const std::vector<int>& edge,
                   const std::vector<Color>& coloring) {
    Color c0 = coloring[edge.front()];
    for (int v : edge)
        if (coloring[v] != c0) return false;
    return true;
}

std::vector<std::vector<int>> edge_adjacency(const ResampleProblem& p) {
    std::vector<std::vector<int>> inc(p.num_vertices);
    for (std::size_t f = 0; f < p.edges.size(); ++f)
        for (int v : p.edges[f]) inc[v].push_back(int(f));
    std::vector<std::vector<int>> adj(p.edges.size());
    std::vector<int> stamp(p.edges.size(), -1);
    for (std::size_t f = 0; f < p.edges.size(); ++f) {
        for (int v : p.edges[f])
            for (int g : inc[v]) {
                if (g == int(f) || stamp[g] == int(f)) continue;
                stamp[g] = int(f);
                adj[f].push_back(g);
            }
        std::sort(adj[f].begin(), adj[f].end());
    }
    return adj;
}

} // namespace

ResampleProblem problem_from(const Hypergraph& h) {
    return ResampleProblem{h.n, h.edges};
}

ResampleResult mt_resample(const ResampleProblem& p,
                           const std::vector<Color>& init, long max_steps,
                           BitStream& bits) {
    if (int(init.size()) != p.num_vertices)
        throw std::invalid_argument("mt_resample: initial coloring size mismatch");
    ResampleResult r;
    r.coloring = init;
    r.resamples_per_edge.assign(p.edges.size(), 0);

    auto adj = edge_adjacency(p);

    // Pending ids are candidates only; staleness is re-checked on pop, so
    // over-insertion is harmless and every monochromatic edge is present.
    std::set<int> pending;
    for (std::size_t f = 0; f < p.edges.size(); ++f)
        if (monochromatic(p.edges[f], r.coloring)) pending.insert(int(f));

    while (!pending.empty() && r.steps_used < max_steps) {
        int f = *pending.begin();
        pending.erase(pending.begin());
        if (!monochromatic(p.edges[f], r.coloring)) continue;
        for (int v : p.edges[f]) r.coloring[v] = bits.next_color();
        ++r.steps_used;
        ++r.resamples_per_edge[f];
        r.step_edges.push_back(f);
        pending.insert(f);
        for (int g : adj[f]) pending.insert(g);
    }

    r.success = true;
    for (const auto& e : p.edges)
        if (monochromatic(e, r.coloring)) {
            r.success = false;
            break;
        }
    return r;
}

ConservativeResult conservative_resample(const Hypergraph& h, double alpha,
                                         const ColorTape& tape, long max_steps,
                                         BitStream& bits) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("conservative_resample: alpha outside (0, 1]");
    ConservativeResult out;
    ResampleResult& r = out.result;
    r.coloring.resize(h.n);
    for (int v = 0; v < h.n; ++v) r.coloring[v] = tape.initial_color(v);
    r.resamples_per_edge.assign(h.m, 0);
    out.resampled.assign(h.n, 0);

    // Fresh = never redrawn. Whole-edge redraw while the fresh part is still
    // larger than (1-alpha)k; afterwards only the stale part is redrawn.
    long full_redraw_min = bad_min_count(h.k, alpha);

    ResampleProblem p{h.n, h.edges};
    auto adj = edge_adjacency(p);
    std::set<int> pending;
    for (int f = 0; f < h.m; ++f)
        if (monochromatic(h.edges[f], r.coloring)) pending.insert(f);

    while (!pending.empty() && r.steps_used < max_steps) {
        int f = *pending.begin();
        pending.erase(pending.begin());
        if (!monochromatic(h.edges[f], r.coloring)) continue;
        long fresh = 0;
        for (int v : h.edges[f])
            if (!out.resampled[v]) ++fresh;
        bool whole = fresh >= full_redraw_min;
        for (int v : h.edges[f]) {
            if (whole || out.resampled[v]) {
                r.coloring[v] = bits.next_color();
                out.resampled[v] = 1;
            }
        }
        ++r.steps_used;
        ++r.resamples_per_edge[f];
        r.step_edges.push_back(f);
        pending.insert(f);
        for (int g : adj[f]) pending.insert(g);
    }

    r.success = true;
    for (const auto& e : h.edges)
        if (monochromatic(e, r.coloring)) {
            r.success = false;
            break;
        }
    return out;
}

} // namespace hlc
