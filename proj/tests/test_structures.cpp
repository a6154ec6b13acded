#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "hlc/generator.hpp"
#include "hlc/structures.hpp"

using namespace hlc;

namespace {

// Test-side oracles work with alpha as an exact fraction num/den and pure
// integer arithmetic, so they share no rounding machinery with the library.

// Least c with c >= (1 - alpha) * k.
long o_weak_min(int k, int num, int den) {
    long target = long(den - num) * k;
    return (target + den - 1) / den;
}

// Least c with c > (1 - alpha) * k.
long o_bad_min(int k, int num, int den) {
    long target = long(den - num) * k;
    return target / den + 1;
}

int count_majority(const Hypergraph& h, const ColorTape& tape, int f,
                   const std::set<int>& skip, bool* mono = nullptr) {
    int red = 0, blue = 0;
    for (int v : h.edges[f]) {
        if (skip.count(v)) continue;
        (tape.initial_color(v) == Color::Red ? red : blue)++;
    }
    if (mono) *mono = red == 0 || blue == 0;
    return std::max(red, blue);
}

// Independent re-statement of structure validity: every witness needs at
// least weak_min one-colored vertices outside its predecessors, the base
// minus all witnesses must be monochromatic with at least weak_min vertices,
// and witnesses must share a vertex with the base.
bool oracle_validate(const Hypergraph& h, const ColorTape& tape, int num,
                     int den, const Structure& s) {
    long weak = o_weak_min(h.k, num, den);
    if (s.base < 0 || s.base >= h.m) return false;
    std::set<int> base_set(h.edges[s.base].begin(), h.edges[s.base].end());
    std::set<int> used;
    for (int g : s.witnesses) {
        if (g < 0 || g >= h.m || g == s.base) return false;
        bool meets_base = false;
        for (int v : h.edges[g])
            if (base_set.count(v)) meets_base = true;
        if (!meets_base) return false;
        if (count_majority(h, tape, g, used) < weak) return false;
        for (int v : h.edges[g]) used.insert(v);
    }
    bool mono = false;
    int rest = 0;
    {
        int red = 0, blue = 0;
        for (int v : h.edges[s.base]) {
            if (used.count(v)) continue;
            (tape.initial_color(v) == Color::Red ? red : blue)++;
        }
        mono = red == 0 || blue == 0;
        rest = red + blue;
    }
    return rest >= weak && mono;
}

bool touches_mask(const Hypergraph& h, int f, const std::vector<char>& mask) {
    for (int v : h.edges[f])
        if (mask[v]) return true;
    return false;
}

// Exhaustive existence oracle: depth-first over ordered sequences of
// distinct witnesses drawn from the base's neighbors, pruning only on a
// violated per-witness condition (final for its prefix). `accept` filters
// complete structures, e.g. by a distance requirement.
struct OracleSearch {
    const Hypergraph& h;
    const ColorTape& tape;
    int num, den;
    const std::vector<char>& excluded;
    std::optional<Structure> found;

    template <class Accept>
    bool exists(const std::vector<int>& bases, Accept accept) {
        found.reset();
        long weak = o_weak_min(h.k, num, den);
        for (int f : bases) {
            if (touches_mask(h, f, excluded)) continue;
            std::vector<int> cand;
            for (int g : neighbors(h, f))
                if (!touches_mask(h, g, excluded)) cand.push_back(g);
            Structure s{f, {}};
            if (extend(s, cand, weak, accept)) return true;
        }
        return false;
    }

    template <class Accept>
    bool extend(Structure& s, const std::vector<int>& cand, long weak,
                Accept accept) {
        if (oracle_validate(h, tape, num, den, s) && accept(s)) {
            found = s;
            return true;
        }
        std::set<int> used;
        for (int g : s.witnesses)
            for (int v : h.edges[g]) used.insert(v);
        for (int g : cand) {
            if (std::count(s.witnesses.begin(), s.witnesses.end(), g)) continue;
            if (count_majority(h, tape, g, used) < weak) continue;
            s.witnesses.push_back(g);
            if (extend(s, cand, weak, accept)) return true;
            s.witnesses.pop_back();
        }
        return false;
    }
};

std::uint64_t find_seed(int n, bool (*pred)(const ColorTape&), long limit = 300000) {
    for (long s = 0; s < limit; ++s) {
        ColorTape tape(std::uint64_t(s), n);
        if (pred(tape)) return std::uint64_t(s);
    }
    REQUIRE(false);
    return 0;
}

Hypergraph chain_graph() {
    // Path of four 6-edges overlapping in single vertices.
    return make_hypergraph(21, 6,
                           {{0, 1, 2, 3, 4, 5},
                            {5, 6, 7, 8, 9, 10},
                            {10, 11, 12, 13, 14, 15},
                            {15, 16, 17, 18, 19, 20}});
}

std::vector<char> mask_of(const Hypergraph& h, std::vector<int> verts) {
    std::vector<char> m(h.n, 0);
    for (int v : verts) m[v] = 1;
    return m;
}

} // namespace

TEST_CASE("alpha-bad detection at the exact count boundary") {
    // k=10, alpha=0.3: (1-alpha)k = 7, so 7 same-colored vertices are not
    // enough ("more than") and 8 are.
    Hypergraph h = make_hypergraph(10, 10, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}});
    auto majority = [](const ColorTape& t) {
        int red = 0;
        for (int v = 0; v < 10; ++v)
            if (t.initial_color(v) == Color::Red) ++red;
        return std::max(red, 10 - red);
    };

    std::uint64_t s7 = find_seed(10, [](const ColorTape& t) {
        int red = 0;
        for (int v = 0; v < 10; ++v)
            if (t.initial_color(v) == Color::Red) ++red;
        return std::max(red, 10 - red) == 7;
    });
    ColorTape t7(s7, 10);
    REQUIRE(majority(t7) == 7);
    CHECK_FALSE(is_alpha_bad(h, t7, 0.3, 0));

    std::uint64_t s8 = find_seed(10, [](const ColorTape& t) {
        int red = 0;
        for (int v = 0; v < 10; ++v)
            if (t.initial_color(v) == Color::Red) ++red;
        return std::max(red, 10 - red) == 8;
    });
    CHECK(is_alpha_bad(h, ColorTape(s8, 10), 0.3, 0));

    std::uint64_t s10 = find_seed(10, [](const ColorTape& t) {
        for (int v = 0; v < 10; ++v)
            if (t.initial_color(v) != t.initial_color(0)) return false;
        return true;
    });
    CHECK(is_alpha_bad(h, ColorTape(s10, 10), 0.3, 0));
}

TEST_CASE("alpha-bad agrees with the integer-threshold oracle") {
    Hypergraph h = generate_bounded_degree(60, 6, 3, 5);
    for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
        ColorTape tape(seed, h.n);
        for (int f = 0; f < h.m; ++f) {
            bool oracle = count_majority(h, tape, f, {}) >= o_bad_min(6, 1, 3);
            CHECK(is_alpha_bad(h, tape, 1.0 / 3.0, f) == oracle);
        }
    }
}

TEST_CASE("structure_vertices sorts and deduplicates") {
    Hypergraph h = chain_graph();
    Structure s{1, {2, 0}};
    CHECK(structure_vertices(h, s) ==
          std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15});
    CHECK(structure_vertices(h, Structure{3, {}}) ==
          std::vector<int>{15, 16, 17, 18, 19, 20});
}

TEST_CASE("validation of a hand-built one-witness structure") {
    // Base {0..5}: four red and two blue; witness {4..9} carries the blues
    // and is all blue, leaving the base residual {0,1,2,3} monochromatic.
    Hypergraph h = make_hypergraph(10, 6, {{0, 1, 2, 3, 4, 5}, {4, 5, 6, 7, 8, 9}});
    std::uint64_t seed = find_seed(10, [](const ColorTape& t) {
        for (int v = 0; v < 4; ++v)
            if (t.initial_color(v) != Color::Red) return false;
        for (int v = 4; v < 10; ++v)
            if (t.initial_color(v) != Color::Blue) return false;
        return true;
    });
    ColorTape tape(seed, 10);
    double alpha = 1.0 / 3.0; // weak_min = 4

    CHECK(validate_structure(h, tape, alpha, Structure{0, {1}}));
    CHECK(validate_structure(h, tape, alpha, Structure{1, {}})); // all blue
    // Base residual {0,1,2,3} plus blues 4,5: not monochromatic.
    CHECK_FALSE(validate_structure(h, tape, alpha, Structure{0, {}}));
    // Repeated witness: second residual is empty.
    CHECK_FALSE(validate_structure(h, tape, alpha, Structure{0, {1, 1}}));
    // A witness must be a neighbor of the base, not the base itself.
    CHECK_FALSE(validate_structure(h, tape, alpha, Structure{0, {0}}));
    // Out-of-range ids.
    CHECK_FALSE(validate_structure(h, tape, alpha, Structure{2, {}}));
    CHECK_FALSE(validate_structure(h, tape, alpha, Structure{0, {7}}));

    CHECK(oracle_validate(h, tape, 1, 3, Structure{0, {1}}));
    CHECK_FALSE(oracle_validate(h, tape, 1, 3, Structure{0, {}}));
}

TEST_CASE("validation agrees with the set-based oracle on random structures") {
    Hypergraph h = generate_bounded_degree(36, 4, 3, 11);
    double alpha = 0.5; // weak_min = 2
    std::uint64_t lcg = 0x243f6a8885a308d3ull;
    auto rnd = [&](int mod) {
        lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
        return int((lcg >> 33) % std::uint64_t(mod));
    };
    int agreements_true = 0;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        ColorTape tape(seed, h.n);
        for (int trial = 0; trial < 400; ++trial) {
            Structure s;
            s.base = rnd(h.m);
            int len = rnd(4);
            auto nbr = neighbors(h, s.base);
            for (int i = 0; i < len; ++i) {
                // Mostly genuine neighbors, sometimes arbitrary edges.
                if (!nbr.empty() && rnd(4) != 0)
                    s.witnesses.push_back(nbr[rnd(int(nbr.size()))]);
                else
                    s.witnesses.push_back(rnd(h.m));
            }
            bool lib = validate_structure(h, tape, alpha, s);
            bool oracle = oracle_validate(h, tape, 1, 2, s);
            CHECK(lib == oracle);
            agreements_true += lib && oracle;
        }
    }
    CHECK(agreements_true > 0); // the sample hit some valid structures
}

TEST_CASE("bounded search matches exhaustive enumeration, vertex queries") {
    // Degree-2 instances keep the unpruned sequence space enumerable.
    for (std::uint64_t gseed : {3u, 7u, 9u}) {
        Hypergraph h = generate_bounded_degree(18, 4, 2, gseed);
        Params p = Params::make(h, 0.5);
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            ColorTape tape(seed, h.n);
            std::vector<char> none(h.n, 0);
            std::vector<char> blocked = none;
            for (int v = 0; v < h.n; v += 5) blocked[v] = 1;
            for (const auto& mask : {none, blocked}) {
                OracleSearch oracle{h, tape, 1, 2, mask, {}};
                for (int v = 0; v < h.n; ++v) {
                    if (mask[v]) continue;
                    auto got = find_structure_containing(h, tape, p, v, mask);
                    bool expect =
                        oracle.exists(h.incidence[v], [](const Structure&) { return true; });
                    CHECK(got.has_value() == expect);
                    if (got) {
                        CHECK(validate_structure(h, tape, 0.5, *got));
                        CHECK(oracle_validate(h, tape, 1, 2, *got));
                        auto verts = structure_vertices(h, *got);
                        CHECK(std::binary_search(verts.begin(), verts.end(), v));
                        for (int u : verts) CHECK_FALSE(mask[u]);
                    }
                }
            }
        }
    }
}

TEST_CASE("near search matches the distance-1 definition") {
    for (std::uint64_t gseed : {2u, 5u}) {
        Hypergraph h = generate_bounded_degree(18, 4, 2, gseed);
        Params p = Params::make(h, 0.5);
        std::vector<int> all_edges(h.m);
        for (int f = 0; f < h.m; ++f) all_edges[f] = f;
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            ColorTape tape(seed, h.n);
            for (int cf = 0; cf < h.m; cf += 2) {
                std::vector<char> comp = mask_of(h, h.edges[cf]);
                std::vector<char> blocked(h.n, 0);
                if (cf + 1 < h.m)
                    for (int v : h.edges[cf + 1])
                        if (!comp[v]) blocked[v] = 1;
                std::vector<char> excl(h.n, 0);
                for (int v = 0; v < h.n; ++v) excl[v] = comp[v] || blocked[v];

                // Distance exactly 1: disjoint from comp, but some edge
                // meets both comp and the structure.
                auto at_distance_one = [&](const Structure& s) {
                    auto verts = structure_vertices(h, s);
                    for (int f = 0; f < h.m; ++f) {
                        bool meets_comp = false, meets_s = false;
                        for (int v : h.edges[f]) {
                            if (comp[v]) meets_comp = true;
                            if (std::binary_search(verts.begin(), verts.end(), v))
                                meets_s = true;
                        }
                        if (meets_comp && meets_s) return true;
                    }
                    return false;
                };
                OracleSearch oracle{h, tape, 1, 2, excl, {}};
                bool expect = oracle.exists(all_edges, at_distance_one);
                auto got = find_structure_near(h, tape, p, comp, blocked);
                CHECK(got.has_value() == expect);
                if (got) {
                    CHECK(validate_structure(h, tape, 0.5, *got));
                    CHECK(at_distance_one(*got));
                    for (int u : structure_vertices(h, *got)) {
                        CHECK_FALSE(comp[u]);
                        CHECK_FALSE(blocked[u]);
                    }
                }
            }
        }
    }
}

TEST_CASE("near search with an empty component finds nothing") {
    Hypergraph h = chain_graph();
    Params p = Params::make(h, 1.0 / 3.0);
    std::vector<char> none(h.n, 0);
    CHECK_FALSE(find_structure_near(h, ColorTape(1, h.n), p, none, none));
}

TEST_CASE("near search rejects structures at distance two") {
    // Chain e0-e1-e2-e3; comp = e0. e2 is unfixable (interior blues), e3 is
    // monochromatic but shares no edge with comp, so it is distance 2.
    Hypergraph h = chain_graph();
    std::uint64_t seed = find_seed(21, [](const ColorTape& t) {
        if (t.initial_color(11) != Color::Blue) return false;
        if (t.initial_color(12) != Color::Blue) return false;
        for (int v : {10, 13, 14, 15, 16, 17, 18, 19, 20})
            if (t.initial_color(v) != Color::Red) return false;
        return true;
    });
    ColorTape tape(seed, h.n);
    Params p = Params::make(h, 1.0 / 3.0);
    std::vector<char> comp = mask_of(h, {0, 1, 2, 3, 4, 5});
    std::vector<char> none(h.n, 0);

    CHECK(validate_structure(h, tape, p.alpha, Structure{3, {}}));
    CHECK_FALSE(find_structure_near(h, tape, p, comp, none));

    // The same structure is reachable from a vertex query on e3.
    auto got = find_structure_containing(h, tape, p, 16, none);
    REQUIRE(got.has_value());
    CHECK(got->base == 3);
    CHECK(got->witnesses.empty());
}

TEST_CASE("search budget exhaustion is reported and stops the search") {
    Hypergraph h = make_hypergraph(10, 6, {{0, 1, 2, 3, 4, 5}, {4, 5, 6, 7, 8, 9}});
    std::uint64_t seed = find_seed(10, [](const ColorTape& t) {
        for (int v = 0; v < 4; ++v)
            if (t.initial_color(v) != Color::Red) return false;
        for (int v = 4; v < 10; ++v)
            if (t.initial_color(v) != Color::Blue) return false;
        return true;
    });
    ColorTape tape(seed, h.n);
    Params p = Params::make(h, 1.0 / 3.0);
    std::vector<char> none(h.n, 0);

    SearchDiag diag;
    auto found = find_structure_containing(h, tape, p, 0, none, &diag);
    REQUIRE(found.has_value()); // base 0 with witness 1
    CHECK(found->base == 0);
    CHECK(found->witnesses == std::vector<int>{1});
    CHECK(diag.found == 1);
    CHECK(diag.budget_exhausted == 0);
    CHECK(diag.nodes_visited > 0);

    Params tiny = p;
    tiny.search_budget = 1; // the root visit burns the whole budget
    SearchDiag diag2;
    CHECK_FALSE(find_structure_containing(h, tape, tiny, 0, none, &diag2));
    CHECK(diag2.budget_exhausted == 1);
    CHECK(diag2.found == 0);
}

TEST_CASE("mono tail: outside part must be monochromatic and large enough") {
    // k=8, alpha=1/4: weak_min = 6. With two component vertices the outside
    // part has exactly 6 vertices.
    Hypergraph h = make_hypergraph(8, 8, {{0, 1, 2, 3, 4, 5, 6, 7}});
    std::uint64_t seed = find_seed(8, [](const ColorTape& t) {
        if (t.initial_color(0) != Color::Blue) return false;
        if (t.initial_color(1) != Color::Red) return false;
        for (int v = 2; v < 8; ++v)
            if (t.initial_color(v) != Color::Red) return false;
        return true;
    });
    ColorTape tape(seed, h.n);

    auto tail = find_mono_tail(h, tape, 0.25, mask_of(h, {0, 1}));
    REQUIRE(tail.has_value());
    CHECK(*tail == 0);
    // Three component vertices leave only 5 outside: below weak_min.
    CHECK_FALSE(find_mono_tail(h, tape, 0.25, mask_of(h, {0, 1, 2})));
    // Outside part {1..7} contains the blue vertex 0? No: mask {1} leaves
    // {0,2..7} with one blue among reds: not monochromatic.
    CHECK_FALSE(find_mono_tail(h, tape, 0.25, mask_of(h, {1})));
    // Edge fully inside the component is skipped.
    CHECK_FALSE(find_mono_tail(h, tape, 0.25,
                               mask_of(h, {0, 1, 2, 3, 4, 5, 6, 7})));
}

TEST_CASE("mono tail matches a brute-force scan and picks the lowest id") {
    Hypergraph h = generate_bounded_degree(40, 4, 3, 13);
    long weak = o_weak_min(4, 1, 2);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        ColorTape tape(seed, h.n);
        for (int cf = 0; cf < h.m; cf += 3) {
            std::vector<char> comp = mask_of(h, h.edges[cf]);
            std::optional<int> expect;
            for (int f = 0; f < h.m && !expect; ++f) {
                int red = 0, blue = 0;
                for (int v : h.edges[f])
                    if (!comp[v])
                        (tape.initial_color(v) == Color::Red ? red : blue)++;
                int outside = red + blue;
                if (outside == 0 || outside < weak) continue;
                if (red == 0 || blue == 0) expect = f;
            }
            auto got = find_mono_tail(h, tape, 0.5, comp);
            CHECK(got == expect);
        }
    }
}
