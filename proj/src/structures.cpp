#include "hlc/structures.hpp"

#include <algorithm>
#include <map>

namespace hlc {

namespace {

struct ColorCount {
    int red = 0;
    int blue = 0;
    int max() const { return red > blue ? red : blue; }
    int total() const { return red + blue; }
};

ColorCount count_colors(const ColorTape& tape, const std::vector<int>& verts) {
    ColorCount c;
    for (int v : verts)
        (tape.initial_color(v) == Color::Red ? c.red : c.blue)++;
    return c;
}

// DFS over ordered witness sequences for one base edge. Witness admission:
// disjoint from `excluded`, at least weak_min one-colored vertices outside
// the already-chosen union, and covering at least one uncovered vertex of
// the base's minority color. Accepts as soon as the base's minority is fully
// covered while at least weak_min majority vertices stay uncovered, so the
// first hit is the lexicographically least witness sequence.
class WitnessSearch {
public:
    WitnessSearch(const Hypergraph& h, const ColorTape& tape, long weak_min,
                  long budget, const std::vector<char>* excluded,
                  const std::vector<char>* must_touch)
        : h_(h), tape_(tape), weak_min_(weak_min), budget_(budget),
          excluded_(excluded), must_touch_(must_touch),
          in_union_(h.n, 0), nodes_(0), exhausted_(false) {}

    long nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }

    // Tries base edge f with survivor color `keep`. Returns the witness list
    // on success.
    std::optional<std::vector<int>> run(int f, Color keep) {
        base_ = f;
        keep_ = keep;
        minority_.clear();
        majority_uncovered_ = 0;
        for (int v : h_.edges[f]) {
            if (tape_.initial_color(v) == keep_)
                ++majority_uncovered_;
            else
                minority_.push_back(v);
        }
        if (majority_uncovered_ < weak_min_) return std::nullopt;
        candidates_ = neighbors(h_, f);
        if (excluded_) {
            std::erase_if(candidates_, [&](int g) {
                for (int v : h_.edges[g])
                    if ((*excluded_)[v]) return true;
                return false;
            });
        }
        chosen_.clear();
        undo_.clear();
        minority_uncovered_ = int(minority_.size());
        for (int v : minority_) minority_covered_[v] = 0;
        bool ok = dfs();
        for (int v : minority_) minority_covered_.erase(v);
        for (int g : chosen_)
            for (int v : h_.edges[g]) in_union_[v] = 0;
        if (ok) return chosen_;
        return std::nullopt;
    }

private:
    bool touches_target() const {
        if (!must_touch_) return true;
        for (int v : h_.edges[base_])
            if ((*must_touch_)[v]) return true;
        for (int g : chosen_)
            for (int v : h_.edges[g])
                if ((*must_touch_)[v]) return true;
        return false;
    }

    bool accepted() const {
        return minority_uncovered_ == 0 && majority_uncovered_ >= weak_min_ &&
               touches_target();
    }

    bool dfs() {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        if (accepted()) return true;
        if (majority_uncovered_ < weak_min_) return false;
        for (int g : candidates_) {
            if (!admissible(g)) continue;
            push(g);
            if (dfs()) return true;
            pop(g);
            if (exhausted_) return false;
        }
        return false;
    }

    bool admissible(int g) const {
        // Covers a new minority vertex of the base.
        bool covers = false;
        for (int v : h_.edges[g]) {
            auto it = minority_covered_.find(v);
            if (it != minority_covered_.end() && it->second == 0) {
                covers = true;
                break;
            }
        }
        if (!covers) return false;
        // At least weak_min one-colored vertices outside the chosen union.
        ColorCount c;
        for (int v : h_.edges[g])
            if (!in_union_[v])
                (tape_.initial_color(v) == Color::Red ? c.red : c.blue)++;
        return c.max() >= weak_min_;
    }

    void push(int g) {
        chosen_.push_back(g);
        undo_.push_back({});
        auto& u = undo_.back();
        for (int v : h_.edges[g]) {
            if (!in_union_[v]) {
                in_union_[v] = 1;
                u.push_back(v);
            }
        }
        for (int v : u) {
            auto it = minority_covered_.find(v);
            if (it != minority_covered_.end()) {
                it->second = 1;
                --minority_uncovered_;
            } else if (in_base_majority(v)) {
                --majority_uncovered_;
            }
        }
    }

    void pop(int g) {
        auto& u = undo_.back();
        for (int v : u) {
            in_union_[v] = 0;
            auto it = minority_covered_.find(v);
            if (it != minority_covered_.end()) {
                it->second = 0;
                ++minority_uncovered_;
            } else if (in_base_majority(v)) {
                ++majority_uncovered_;
            }
        }
        undo_.pop_back();
        chosen_.pop_back();
        (void)g;
    }

    bool in_base_majority(int v) const {
        if (tape_.initial_color(v) != keep_) return false;
        return std::binary_search(h_.edges[base_].begin(),
                                  h_.edges[base_].end(), v);
    }

    const Hypergraph& h_;
    const ColorTape& tape_;
    long weak_min_;
    long budget_;
    const std::vector<char>* excluded_;
    const std::vector<char>* must_touch_;
    std::vector<char> in_union_;
    long nodes_;
    bool exhausted_;

    int base_ = -1;
    Color keep_ = Color::Red;
    std::vector<int> minority_;
    std::vector<int> candidates_;
    std::vector<int> chosen_;
    std::vector<std::vector<int>> undo_;
    std::map<int, int> minority_covered_;
    long majority_uncovered_ = 0;
    int minority_uncovered_ = 0;
};

bool edge_blocked(const Hypergraph& h, int f, const std::vector<char>& mask) {
    for (int v : h.edges[f])
        if (mask[v]) return true;
    return false;
}

std::optional<Structure> search_bases(
    const Hypergraph& h, const ColorTape& tape, const Params& params,
    const std::vector<int>& bases, const std::vector<char>& excluded,
    const std::vector<char>* must_touch, SearchDiag* diag) {
    long weak_min = weak_min_count(params.k, params.alpha);
    WitnessSearch search(h, tape, weak_min, params.search_budget, &excluded,
                         must_touch);
    std::optional<Structure> out;
    for (int f : bases) {
        if (edge_blocked(h, f, excluded)) continue;
        ColorCount c = count_colors(tape, h.edges[f]);
        // Majority color first as survivor (Red first on ties); the other
        // color is only reachable when alpha >= 1/2 and fails fast otherwise.
        Color first = c.red >= c.blue ? Color::Red : Color::Blue;
        for (Color keep : {first, first == Color::Red ? Color::Blue : Color::Red}) {
            auto w = search.run(f, keep);
            if (w) {
                out = Structure{f, std::move(*w)};
                break;
            }
            if (search.exhausted()) break;
        }
        if (out || search.exhausted()) break;
    }
    if (diag) {
        diag->nodes_visited += search.nodes();
        if (search.exhausted()) ++diag->budget_exhausted;
        if (out) ++diag->found;
    }
    return out;
}

} // namespace

bool is_alpha_bad(const Hypergraph& h, const ColorTape& tape, double alpha,
                  int f) {
    ColorCount c = count_colors(tape, h.edges[f]);
    return c.max() >= bad_min_count(h.k, alpha);
}

std::vector<int> structure_vertices(const Hypergraph& h, const Structure& s) {
    std::vector<int> out = h.edges[s.base];
    for (int g : s.witnesses)
        out.insert(out.end(), h.edges[g].begin(), h.edges[g].end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool validate_structure(const Hypergraph& h, const ColorTape& tape,
                        double alpha, const Structure& s) {
    if (s.base < 0 || s.base >= h.m) return false;
    long weak_min = weak_min_count(h.k, alpha);
    std::vector<char> in_union(h.n, 0);
    auto nbrs = neighbors(h, s.base);
    for (std::size_t j = 0; j < s.witnesses.size(); ++j) {
        int g = s.witnesses[j];
        if (g < 0 || g >= h.m) return false;
        if (!std::binary_search(nbrs.begin(), nbrs.end(), g)) return false;
        ColorCount c;
        for (int v : h.edges[g])
            if (!in_union[v])
                (tape.initial_color(v) == Color::Red ? c.red : c.blue)++;
        if (c.max() < weak_min) return false;
        for (int v : h.edges[g]) in_union[v] = 1;
    }
    ColorCount rest;
    for (int v : h.edges[s.base])
        if (!in_union[v])
            (tape.initial_color(v) == Color::Red ? rest.red : rest.blue)++;
    if (rest.total() < weak_min) return false;
    return rest.red == rest.total() || rest.blue == rest.total();
}

std::optional<Structure> find_structure_containing(
    const Hypergraph& h, const ColorTape& tape, const Params& params, int v,
    const std::vector<char>& blocked, SearchDiag* diag) {
    return search_bases(h, tape, params, h.incidence[v], blocked, nullptr,
                        diag);
}

std::optional<Structure> find_structure_near(
    const Hypergraph& h, const ColorTape& tape, const Params& params,
    const std::vector<char>& comp, const std::vector<char>& blocked,
    SearchDiag* diag) {
    // Vertices at distance <= 1 from comp, then <= 2; every structure at
    // distance 1 has a base meeting the distance-2 shell (witnesses are base
    // neighbors, so the base sits within two hops of the bridge vertex).
    std::vector<char> d1(h.n, 0), d2(h.n, 0);
    std::vector<char> bridge(h.n, 0); // distance exactly 1
    for (int f = 0; f < h.m; ++f) {
        bool touches = false;
        for (int v : h.edges[f])
            if (comp[v]) {
                touches = true;
                break;
            }
        if (touches)
            for (int v : h.edges[f]) d1[v] = 1;
    }
    for (int v = 0; v < h.n; ++v)
        if (d1[v] && !comp[v]) bridge[v] = 1;
    for (int f = 0; f < h.m; ++f) {
        bool touches = false;
        for (int v : h.edges[f])
            if (d1[v]) {
                touches = true;
                break;
            }
        if (touches)
            for (int v : h.edges[f]) d2[v] = 1;
    }

    std::vector<int> bases;
    for (int f = 0; f < h.m; ++f)
        for (int v : h.edges[f])
            if (d2[v]) {
                bases.push_back(f);
                break;
            }

    // Blocked set for the search: completed components plus the in-progress
    // component itself.
    std::vector<char> excluded(h.n, 0);
    for (int v = 0; v < h.n; ++v) excluded[v] = blocked[v] || comp[v];

    return search_bases(h, tape, params, bases, excluded, &bridge, diag);
}

std::optional<int> find_mono_tail(const Hypergraph& h, const ColorTape& tape,
                                  double alpha, const std::vector<char>& comp) {
    long weak_min = weak_min_count(h.k, alpha);
    for (int f = 0; f < h.m; ++f) {
        ColorCount c;
        int outside = 0;
        for (int v : h.edges[f]) {
            if (comp[v]) continue;
            ++outside;
            (tape.initial_color(v) == Color::Red ? c.red : c.blue)++;
        }
        if (outside == 0) continue; // f contained in comp
        if (outside < weak_min) continue;
        if (c.red == outside || c.blue == outside) return f;
    }
    return std::nullopt;
}

} // namespace hlc
