#include "hlc/baseline.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hlc/resample.hpp"
#include "hlc/structures.hpp"

namespace hlc {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Groups vertices by union-find root; groups come out sorted and ordered by
// their minimum vertex id because vertices are scanned ascending.
std::vector<std::vector<int>> collect_groups(UnionFind& uf,
                                             const std::vector<char>& member,
                                             int n) {
    std::map<int, std::vector<int>> by_root;
    for (int v = 0; v < n; ++v)
        if (member[v]) by_root[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    out.reserve(by_root.size());
    for (auto& [root, vs] : by_root) out.push_back(std::move(vs));
    return out;
}

} // namespace

std::vector<std::vector<int>> bad_components(const Hypergraph& h,
                                             const ColorTape& tape,
                                             double alpha) {
    UnionFind uf(h.n);
    std::vector<char> member(h.n, 0);
    for (int f = 0; f < h.m; ++f) {
        if (!is_alpha_bad(h, tape, alpha, f)) continue;
        for (int v : h.edges[f]) {
            member[v] = 1;
            uf.unite(h.edges[f][0], v);
        }
    }
    return collect_groups(uf, member, h.n);
}

std::vector<std::vector<int>> merge_components(
    const Hypergraph& h, const std::vector<std::vector<int>>& comps) {
    std::vector<int> comp_of(h.n, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) {
            if (comp_of[v] >= 0)
                throw std::invalid_argument(
                    "merge_components: input components overlap at vertex " +
                    std::to_string(v));
            comp_of[v] = int(c);
        }
    // One union-find pass reaches the fixpoint: the final sets are the
    // connected components of "two components meet a common edge".
    UnionFind uf(int(comps.size()));
    for (int f = 0; f < h.m; ++f) {
        int first = -1;
        for (int v : h.edges[f]) {
            int c = comp_of[v];
            if (c < 0) continue;
            if (first < 0)
                first = c;
            else
                uf.unite(first, c);
        }
    }
    UnionFind vertex_uf(h.n);
    std::vector<char> member(h.n, 0);
    std::vector<int> rep(comps.size(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        int root = uf.find(int(c));
        if (rep[root] < 0) rep[root] = comps[c][0];
        for (int v : comps[c]) {
            member[v] = 1;
            vertex_uf.unite(rep[root], v);
        }
    }
    return collect_groups(vertex_uf, member, h.n);
}

AlonResult alon_color(const Hypergraph& h, const ColorTape& tape,
                      const Params& params, int threads) {
    AlonResult out;
    out.stats.degree_condition_ok =
        check_degree_condition(params.k, params.delta, params.alpha);

    out.coloring.resize(h.n);
    for (int v = 0; v < h.n; ++v) out.coloring[v] = tape.initial_color(v);
    out.stats.random_bits += h.n;

    for (int f = 0; f < h.m; ++f)
        if (is_alpha_bad(h, tape, params.alpha, f)) ++out.stats.bad_edges;

    auto initial = bad_components(h, tape, params.alpha);
    out.stats.components_before_merge = long(initial.size());
    auto comps = merge_components(h, initial);
    out.stats.components = long(comps.size());
    for (const auto& c : comps)
        out.stats.largest_component =
            std::max(out.stats.largest_component, long(c.size()));

    std::vector<int> comp_of(h.n, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = int(c);
    for (int f = 0; f < h.m; ++f) {
        int seen = -1;
        for (int v : h.edges[f]) {
            int c = comp_of[v];
            if (c < 0) continue;
            if (seen >= 0 && c != seen)
                throw std::logic_error(
                    "alon_color: merged components not edge-separated");
            seen = c;
        }
    }

    // Edges each component must protect: those it meets whose outside part is
    // empty or monochromatic (everything else is already properly colored by
    // outside vertices), trimmed to their intersection with the component.
    std::vector<std::vector<std::vector<int>>> trims(comps.size());
    for (int f = 0; f < h.m; ++f) {
        int comp = -1;
        std::vector<int> inside;
        int out_red = 0, out_blue = 0;
        for (int v : h.edges[f]) {
            if (comp_of[v] >= 0) {
                comp = comp_of[v];
                inside.push_back(v);
            } else {
                (out.coloring[v] == Color::Red ? out_red : out_blue)++;
            }
        }
        if (comp < 0) continue;
        if (out_red > 0 && out_blue > 0) continue;
        trims[comp].push_back(std::move(inside));
    }

    struct PerComp {
        bool success = false;
        std::vector<Color> colors; // aligned with the component's vertex list
        long steps = 0;
        long bits = 0;
        long trimmed = 0;
    };
    std::vector<PerComp> results(comps.size());

    auto run_component = [&](int ci) {
        PerComp& r = results[ci];
        const auto& verts = comps[ci];
        std::vector<int> local_of(h.n, -1);
        for (std::size_t i = 0; i < verts.size(); ++i)
            local_of[verts[i]] = int(i);
        ResampleProblem p;
        p.num_vertices = int(verts.size());
        for (const auto& e : trims[ci]) {
            std::vector<int> le;
            le.reserve(e.size());
            for (int v : e) le.push_back(local_of[v]);
            p.edges.push_back(std::move(le));
        }
        r.trimmed = long(p.edges.size());
        long et = 1;
        if (params.delta > 0)
            et = std::max<long>(
                1, (long(p.edges.size()) + params.delta - 1) / params.delta);
        long steps = 2 * et;
        for (int trial = 1; trial <= params.trials; ++trial) {
            BitStream bits{&tape, alon_stream(ci, trial)};
            std::vector<Color> init(p.num_vertices);
            for (auto& col : init) col = bits.next_color();
            ResampleResult rr = mt_resample(p, init, steps, bits);
            r.steps += rr.steps_used;
            r.bits += long(bits.consumed());
            if (rr.success) {
                r.success = true;
                r.colors = std::move(rr.coloring);
                break;
            }
        }
    };

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, threads)) \
    if (threads > 1)
    for (int ci = 0; ci < int(comps.size()); ++ci) run_component(ci);
#else
    (void)threads;
    for (int ci = 0; ci < int(comps.size()); ++ci) run_component(ci);
#endif

    out.success = true;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const PerComp& r = results[ci];
        out.stats.trimmed_edges += r.trimmed;
        out.stats.resample_steps += r.steps;
        out.stats.random_bits += r.bits;
        if (r.success) {
            for (std::size_t i = 0; i < comps[ci].size(); ++i)
                out.coloring[comps[ci][i]] = r.colors[i];
        } else if (out.success) {
            out.success = false;
            out.failed_component = int(ci);
        }
    }
    return out;
}

} // namespace hlc
