#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <optional>
#include <vector>

#include "hlc/engine.hpp"
#include "hlc/generator.hpp"
#include "hlc/verify.hpp"

using namespace hlc;

namespace {

Hypergraph path3() {
    // Three 4-edges overlapping in single vertices: 0-1-2-3, 3-4-5-6, 6-7-8-9.
    return make_hypergraph(10, 4, {{0, 1, 2, 3}, {3, 4, 5, 6}, {6, 7, 8, 9}});
}

bool all_red(const ColorTape& tape, int n) {
    for (int v = 0; v < n; ++v)
        if (tape.initial_color(v) != Color::Red) return false;
    return true;
}

long audit_total(const EngineCounters& c) {
    return c.stability_violations + c.separation_violations +
           c.trace_violations + c.coverage_violations +
           c.classification_violations + c.witness_improper +
           c.witness_event_failures + c.witness_unjoinable;
}

} // namespace

TEST_CASE("trim keeps exactly the edges with alpha*k component vertices") {
    // k=10, alpha=0.3: an edge stays when at least 3 of its vertices lie in
    // the component.
    Hypergraph h = make_hypergraph(14, 10, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
                                            {2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
                                            {0, 1, 4, 5, 6, 7, 8, 9, 12, 13}});
    std::vector<int> comp{0, 1, 2}; // 3 in edge0, 1 in edge1, 2 in edge2
    TrimmedHypergraph t = trim_to_component(h, comp, 0.3);
    REQUIRE(t.edges.size() == 1);
    CHECK(t.source_edge == std::vector<int>{0});
    CHECK(t.edges[0] == std::vector<int>{0, 1, 2});
    CHECK(t.vertices == comp);

    std::vector<int> comp2{2, 3, 10, 11}; // 2 / 4 / 0 vertices inside
    TrimmedHypergraph t2 = trim_to_component(h, comp2, 0.3);
    REQUIRE(t2.edges.size() == 1);
    CHECK(t2.source_edge == std::vector<int>{1});
    CHECK(t2.edges[0] == std::vector<int>{2, 3, 10, 11});
}

TEST_CASE("trim matches a brute-force scan on generated instances") {
    Hypergraph h = generate_bounded_degree(48, 6, 3, 17);
    double alpha = 1.0 / 3.0;
    long need = trim_min_count(6, alpha); // 2
    for (int start = 0; start < h.m; start += 4) {
        std::vector<int> comp = h.edges[start];
        if (start + 1 < h.m)
            for (int v : h.edges[start + 1]) comp.push_back(v);
        std::sort(comp.begin(), comp.end());
        comp.erase(std::unique(comp.begin(), comp.end()), comp.end());
        std::vector<char> in(h.n, 0);
        for (int v : comp) in[v] = 1;

        TrimmedHypergraph t = trim_to_component(h, comp, alpha);
        std::size_t at = 0;
        for (int f = 0; f < h.m; ++f) {
            std::vector<int> part;
            for (int v : h.edges[f])
                if (in[v]) part.push_back(v);
            if (long(part.size()) < need) continue;
            REQUIRE(at < t.edges.size());
            CHECK(t.source_edge[at] == f);
            CHECK(t.edges[at] == part);
            ++at;
        }
        CHECK(at == t.edges.size());
    }
}

TEST_CASE("distance-1 neighborhood") {
    Hypergraph h = path3();
    CHECK(v1_neighborhood(h, {0, 1, 2, 3}) ==
          std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK(v1_neighborhood(h, {4}) == std::vector<int>{3, 4, 5, 6});
    CHECK(v1_neighborhood(h, {}) == std::vector<int>{});

    Hypergraph g = generate_bounded_degree(40, 4, 3, 19);
    std::vector<int> comp = g.edges[0];
    std::vector<char> expect(g.n, 0);
    for (int v : comp) expect[v] = 1;
    for (int f = 0; f < g.m; ++f) {
        bool touches = false;
        for (int v : g.edges[f])
            if (std::count(comp.begin(), comp.end(), v)) touches = true;
        if (touches)
            for (int v : g.edges[f]) expect[v] = 1;
    }
    std::vector<int> want;
    for (int v = 0; v < g.n; ++v)
        if (expect[v]) want.push_back(v);
    CHECK(v1_neighborhood(g, comp) == want);
}

TEST_CASE("with no structures anywhere the run reproduces the tape") {
    // k=8, alpha=0.3 needs a 6-vertex one-colored majority to seed a
    // structure; a tape where every edge splits at worst 5-3 forces plain
    // initial coloring everywhere.
    Hypergraph h = generate_bounded_degree(16, 8, 2, 20);
    std::optional<std::uint64_t> seed;
    for (std::uint64_t s = 0; s < 50000 && !seed; ++s) {
        ColorTape tape(s, h.n);
        bool calm = true;
        for (int f = 0; f < h.m && calm; ++f) {
            int red = 0;
            for (int v : h.edges[f])
                if (tape.initial_color(v) == Color::Red) ++red;
            if (std::max(red, 8 - red) >= 6) calm = false;
        }
        if (calm) seed = s;
    }
    REQUIRE(seed.has_value());
    ColorTape tape(*seed, h.n);
    Params p = Params::make(h, 0.3);
    RunOutcome out = run_complete(h, tape, p, ascending_order(h.n),
                                  CheckConfig{true, true});
    REQUIRE(out.success);
    CHECK(out.components.empty());
    CHECK(out.counters.structures_found == 0);
    CHECK(out.counters.random_bits == h.n);
    CHECK(audit_total(out.counters) == 0);
    for (int v = 0; v < h.n; ++v)
        CHECK(out.coloring[v] == tape.initial_color(v));
    CHECK(is_proper_coloring(h, out.coloring).proper);
}

TEST_CASE("an all-red path is absorbed through monochromatic tails") {
    Hypergraph h = path3();
    Params p = Params::make(h, 0.3);
    std::optional<std::uint64_t> seed;
    for (std::uint64_t s = 0; s < 300000 && !seed; ++s) {
        ColorTape tape(s, h.n);
        if (!all_red(tape, h.n)) continue;
        Engine probe(h, tape, p);
        if (probe.query(0).has_value()) seed = s;
    }
    REQUIRE(seed.has_value());
    ColorTape tape(*seed, h.n);
    Engine eng(h, tape, p, CheckConfig{true, true});
    auto c0 = eng.query(0);
    REQUIRE(c0.has_value());
    REQUIRE(eng.components().size() == 1);
    const Component& comp = eng.components()[0];
    CHECK(comp.vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    REQUIRE(comp.trace.size() == 3);
    CHECK(comp.trace[0] == std::make_pair(0, TraceRole::Mono));
    CHECK(comp.trace[1] == std::make_pair(1, TraceRole::Mono));
    CHECK(comp.trace[2] == std::make_pair(2, TraceRole::Mono));
    CHECK(audit_total(eng.counters()) == 0);
    // The component swallowed every vertex, so all colors are settled.
    for (int v = 0; v < h.n; ++v) CHECK(eng.is_colored(v));
}

TEST_CASE("queries are idempotent and settled by the first answer") {
    Hypergraph h = generate_bounded_degree(60, 8, 2, 23);
    Params p = Params::make(h, 0.3);
    std::optional<std::uint64_t> good;
    for (std::uint64_t s = 0; s < 1000 && !good; ++s)
        if (run_complete(h, ColorTape(s, h.n), p, ascending_order(h.n)).success)
            good = s;
    REQUIRE(good.has_value());
    ColorTape tape(*good, h.n);
    Engine eng(h, tape, p);
    for (int v = 0; v < h.n; v += 7) {
        auto first = eng.query(v);
        REQUIRE(first.has_value());
        long bits_before = eng.counters().random_bits;
        auto second = eng.query(v);
        REQUIRE(second.has_value());
        CHECK(*first == *second);
        CHECK(eng.counters().random_bits == bits_before);
        CHECK(eng.current_color(v) == *first);
        CHECK(eng.is_colored(v));
    }
    CHECK_THROWS_AS(eng.query(-1), std::out_of_range);
    CHECK_THROWS_AS(eng.query(h.n), std::out_of_range);
}

TEST_CASE("component cap overflow fails sticky") {
    Hypergraph h = path3();
    Params p = Params::make(h, 0.3, 7);
    std::optional<std::uint64_t> seed;
    for (std::uint64_t s = 0; s < 300000 && !seed; ++s)
        if (all_red(ColorTape(s, h.n), h.n)) seed = s;
    REQUIRE(seed.has_value());
    ColorTape tape(*seed, h.n);
    Engine eng(h, tape, p);
    CHECK_FALSE(eng.query(0).has_value());
    REQUIRE(eng.failure().has_value());
    CHECK(eng.failure()->kind == FailureKind::ComponentTooLarge);

    long queries_before = eng.counters().queries;
    CHECK_FALSE(eng.query(5).has_value()); // sticky, no further work
    CHECK(eng.counters().queries == queries_before);
    CHECK(eng.components().empty());

    RunOutcome out = run_complete(h, tape, p, ascending_order(h.n));
    CHECK_FALSE(out.success);
    REQUIRE(out.failure.has_value());
    CHECK(out.failure->kind == FailureKind::ComponentTooLarge);
    CHECK(out.coloring.empty());
}

TEST_CASE("coloring failure after exhausting every trial") {
    // Single 2-edge, alpha=0.6: the trimmed instance is the edge itself with
    // two coloring trials of two steps. A seed where the edge starts
    // monochromatic and both trials keep it monochromatic must exist.
    Hypergraph h = make_hypergraph(2, 2, {{0, 1}});
    Params p = Params::make(h, 0.6);
    REQUIRE(p.trials == 2);
    std::optional<std::uint64_t> seed;
    for (std::uint64_t s = 0; s < 300000 && !seed; ++s) {
        ColorTape tape(s, h.n);
        if (tape.initial_color(0) != tape.initial_color(1)) continue;
        Engine probe(h, tape, p);
        if (!probe.query(0).has_value()) seed = s;
    }
    REQUIRE(seed.has_value());
    ColorTape tape(*seed, h.n);
    Engine eng(h, tape, p);
    CHECK_FALSE(eng.query(0).has_value());
    REQUIRE(eng.failure().has_value());
    CHECK(eng.failure()->kind == FailureKind::ColoringTrialsExhausted);
    CHECK(eng.counters().trial_exhaustions == 1);
    CHECK(eng.counters().color_component_calls == 1);
    CHECK(eng.counters().first_trial_successes == 0);
    CHECK(eng.components().empty());
}

TEST_CASE("healthy runs pass every audit and produce proper colorings") {
    // k=8 at alpha=0.3 sits far outside the guarantee region, so the
    // regime-dependent audits (stability, separation, classification) may
    // legitimately fire on rare seeds when a later component brushes an
    // earlier component's committed shell. The construction-level audits
    // (trace replay, structure coverage, witness trees) must never fire.
    int successes = 0, tainted_runs = 0;
    for (std::uint64_t gseed : {31u, 37u}) {
        Hypergraph h = generate_bounded_degree(80, 8, 2, gseed);
        Params p = Params::make(h, 0.3);
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            ColorTape tape(seed, h.n);
            for (bool randomized : {false, true}) {
                auto order = randomized ? random_order(h.n, tape)
                                        : ascending_order(h.n);
                RunOutcome out = run_complete(h, tape, p, order,
                                              CheckConfig{true, true});
                const EngineCounters& c = out.counters;
                CHECK(c.trace_violations == 0);
                CHECK(c.coverage_violations == 0);
                CHECK(c.witness_improper == 0);
                CHECK(c.witness_event_failures == 0);
                CHECK(c.witness_unjoinable == 0);
                if (c.stability_violations + c.separation_violations +
                        c.classification_violations >
                    0)
                    ++tainted_runs;
                if (out.success) {
                    ++successes;
                    CHECK(is_proper_coloring(h, out.coloring).proper);
                    CHECK(int(out.coloring.size()) == h.n);
                }
                // Component sizes histogram is consistent with components.
                long hist = 0;
                for (auto& [size, count] : out.counters.component_sizes)
                    hist += count;
                CHECK(hist == long(out.components.size()));
            }
        }
    }
    CHECK(successes >= 54);    // 60 runs; coloring failures are rare but legal
    CHECK(tainted_runs <= 5);  // observed: 2 runs with a stability clash
}

TEST_CASE("per-query timing is recorded when requested") {
    Hypergraph h = generate_bounded_degree(24, 4, 2, 41);
    ColorTape tape(3, h.n);
    Params p = Params::make(h, 0.5);
    RunOutcome out = run_complete(h, tape, p, ascending_order(h.n), {}, true);
    CHECK(out.query_ns.size() == std::size_t(out.counters.queries));
    for (long ns : out.query_ns) CHECK(ns >= 0);
}

TEST_CASE("query orders: ascending and seeded permutation") {
    CHECK(ascending_order(4) == std::vector<int>{0, 1, 2, 3});
    ColorTape tape(9, 50);
    auto a = random_order(50, tape);
    auto b = random_order(50, tape);
    CHECK(a == b); // pure function of the tape
    auto sorted = a;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == ascending_order(50));
    auto c = random_order(50, ColorTape(10, 50));
    CHECK(a != c);
}
