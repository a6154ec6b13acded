#include "hlc/verify.hpp"

#include <algorithm>
#include <cstdint>

#include "hlc/params.hpp"

namespace hlc {

ProperCheck is_proper_coloring(const Hypergraph& h,
                               const std::vector<Color>& coloring) {
    if (int(coloring.size()) != h.n)
        throw std::invalid_argument("is_proper_coloring: coloring covers " +
                                    std::to_string(coloring.size()) +
                                    " vertices, instance has " +
                                    std::to_string(h.n));
    ProperCheck out;
    for (int f = 0; f < h.m; ++f) {
        int red = 0, blue = 0;
        for (int v : h.edges[f]) (coloring[v] == Color::Red ? red : blue)++;
        if (red == 0 || blue == 0) out.violating.push_back(f);
    }
    out.proper = out.violating.empty();
    return out;
}

std::vector<EdgeClass> classify_edges(const Hypergraph& h,
                                      const std::vector<std::vector<int>>& components,
                                      double alpha) {
    std::vector<int> comp_of(h.n, -1);
    for (std::size_t c = 0; c < components.size(); ++c)
        for (int v : components[c]) {
            if (v < 0 || v >= h.n)
                throw std::invalid_argument("classify_edges: vertex out of range");
            if (comp_of[v] >= 0)
                throw AuditError(-1, "classify_edges: components overlap at vertex " +
                                         std::to_string(v));
            comp_of[v] = int(c);
        }
    int threshold = trim_min_count(h.k, alpha);
    std::vector<EdgeClass> classes(h.m, EdgeClass::E1);
    for (int f = 0; f < h.m; ++f) {
        int comp = -1, inside = 0;
        for (int v : h.edges[f]) {
            int c = comp_of[v];
            if (c < 0) continue;
            if (comp >= 0 && c != comp)
                throw AuditError(f, "classify_edges: edge " + std::to_string(f) +
                                        " meets components " + std::to_string(comp) +
                                        " and " + std::to_string(c));
            comp = c;
            ++inside;
        }
        if (inside == 0)
            classes[f] = EdgeClass::E1;
        else
            classes[f] = inside >= threshold ? EdgeClass::E3 : EdgeClass::E2;
    }
    return classes;
}

std::optional<std::vector<Color>> exhaustive_two_colorable(const Hypergraph& h) {
    if (h.n > 26)
        throw std::invalid_argument("exhaustive_two_colorable: n=" +
                                    std::to_string(h.n) + " exceeds the 2^26 cap");
    // Gray-code walk: one vertex flips per step, so edge blue-counts and the
    // monochromatic-edge count update in O(deg) per step.
    std::vector<int> blue(h.m, 0);
    auto mono = [&](int f) { return blue[f] == 0 || blue[f] == h.k; };
    int violated = h.m; // all-Red start: every edge monochromatic
    std::uint32_t mask = 0;           // bit v = 1 iff vertex v is Blue
    std::uint32_t key = 0;            // bit-reversed mask: vertex 0 most significant
    bool found = false;
    std::uint32_t best_key = 0, best_mask = 0;
    auto consider = [&]() {
        if (violated != 0) return;
        if (!found || key < best_key) {
            found = true;
            best_key = key;
            best_mask = mask;
        }
    };
    consider();
    std::uint64_t total = std::uint64_t(1) << h.n;
    for (std::uint64_t i = 1; i < total; ++i) {
        int v = __builtin_ctzll(i); // Gray-code flip position
        std::uint32_t bit = std::uint32_t(1) << v;
        mask ^= bit;
        key ^= std::uint32_t(1) << (h.n - 1 - v);
        bool now_blue = (mask & bit) != 0;
        for (int f : h.incidence[v]) {
            violated -= mono(f);
            blue[f] += now_blue ? 1 : -1;
            violated += mono(f);
        }
        consider();
    }
    if (!found) return std::nullopt;
    std::vector<Color> coloring(h.n);
    for (int v = 0; v < h.n; ++v)
        coloring[v] = (best_mask >> v) & 1 ? Color::Blue : Color::Red;
    return coloring;
}

} // namespace hlc
