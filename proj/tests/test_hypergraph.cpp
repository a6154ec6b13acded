#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "hlc/generator.hpp"
#include "hlc/hypergraph.hpp"

using namespace hlc;

namespace {

// O(m^2 k) reference for the incidence-based production kernel.
long brute_force_delta(const Hypergraph& h) {
    long best = 0;
    for (int f = 0; f < h.m; ++f) {
        long deg = 0;
        for (int g = 0; g < h.m; ++g) {
            if (f == g) continue;
            bool meets = false;
            for (int v : h.edges[f])
                if (std::binary_search(h.edges[g].begin(), h.edges[g].end(), v)) {
                    meets = true;
                    break;
                }
            deg += meets;
        }
        best = std::max(best, deg);
    }
    return best;
}

std::vector<int> brute_force_neighbors(const Hypergraph& h, int f) {
    std::vector<int> out;
    for (int g = 0; g < h.m; ++g) {
        if (g == f) continue;
        for (int v : h.edges[g])
            if (std::binary_search(h.edges[f].begin(), h.edges[f].end(), v)) {
                out.push_back(g);
                break;
            }
    }
    return out;
}

} // namespace

TEST_CASE("make_hypergraph fills fields, incidence, and delta") {
    Hypergraph h = make_hypergraph(6, 3, {{0, 1, 2}, {2, 3, 4}, {3, 4, 5}});
    CHECK(h.n == 6);
    CHECK(h.m == 3);
    CHECK(h.k == 3);
    CHECK(h.incidence[2] == std::vector<int>{0, 1});
    CHECK(h.incidence[4] == std::vector<int>{1, 2});
    CHECK(h.delta == 2); // edge 1 meets both others
    CHECK(h.delta == brute_force_delta(h));
}

TEST_CASE("make_hypergraph rejects malformed input") {
    CHECK_THROWS_AS(make_hypergraph(4, 2, {{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_hypergraph(4, 2, {{0, 4}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_hypergraph(4, 2, {{1, 1}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_hypergraph(4, 2, {{0, 1}, {1, 0}, {2, 3}}),
                    std::invalid_argument);
    // Vertex 3 isolated.
    CHECK_THROWS_AS(make_hypergraph(4, 2, {{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("parse accepts comments and reports line numbers on errors") {
    const char* good = "c a comment\np khyp 4 2 2\ne 0 1\nc another\ne 2 3\n";
    Hypergraph h = parse_hypergraph(good);
    CHECK(h.n == 4);
    CHECK(h.m == 2);

    auto line_of = [](const char* text) {
        try {
            parse_hypergraph(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("p wrong 4 2 2\ne 0 1\ne 2 3\n") == 1);
    CHECK(line_of("p khyp 4 2 2\ne 0 1\ne 2\n") == 3);
    CHECK(line_of("p khyp 4 2 2\ne 0 1\nz 2 3\n") == 3);
    // Duplicate edge reported at the offending line.
    CHECK(line_of("p khyp 4 3 2\ne 0 1\ne 2 3\ne 1 0\n") == 4);
}

TEST_CASE("serialize/parse round-trip is canonical") {
    Hypergraph h = generate_bounded_degree(60, 4, 3, 11);
    std::string text = serialize_hypergraph(h);
    Hypergraph h2 = parse_hypergraph(text);
    CHECK(serialize_hypergraph(h2) == text);
    CHECK(h2.n == h.n);
    CHECK(h2.m == h.m);
    CHECK(h2.edges == h.edges);
}

TEST_CASE("neighbors matches the pairwise scan") {
    Hypergraph h = generate_bounded_degree(80, 5, 3, 3);
    for (int f = 0; f < h.m; ++f) CHECK(neighbors(h, f) == brute_force_neighbors(h, f));
}

TEST_CASE("max_edge_degree: parallel kernel equals serial equals brute force") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Hypergraph h = generate_bounded_degree(200, 6, 4, seed);
        long brute = brute_force_delta(h);
        CHECK(max_edge_degree(h, 1) == brute);
        CHECK(max_edge_degree(h, 4) == brute);
        CHECK(h.delta == brute);
    }
}

TEST_CASE("generator output is k-uniform with bounded degree and no duplicates") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Hypergraph h = generate_bounded_degree(120, 8, 3, seed);
        CHECK(h.n == 120);
        std::vector<int> degree(h.n, 0);
        std::set<std::vector<int>> edge_set;
        for (const auto& e : h.edges) {
            CHECK(int(e.size()) == 8);
            CHECK(edge_set.insert(e).second);
            for (int v : e) ++degree[v];
        }
        for (int v = 0; v < h.n; ++v) {
            CHECK(degree[v] >= 1); // no isolated vertices
            CHECK(degree[v] <= 3);
        }
        // Max edge degree never exceeds k(d-1): each of the k vertices admits
        // at most d-1 other incident edges.
        CHECK(h.delta <= 8 * (3 - 1));
    }
}

TEST_CASE("generator is deterministic in the seed") {
    Hypergraph a = generate_bounded_degree(90, 6, 2, 77);
    Hypergraph b = generate_bounded_degree(90, 6, 2, 77);
    Hypergraph c = generate_bounded_degree(90, 6, 2, 78);
    CHECK(a.edges == b.edges);
    CHECK(a.edges != c.edges);
}

TEST_CASE("generator rejects infeasible parameters") {
    CHECK_THROWS_AS(generate_bounded_degree(7, 8, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_bounded_degree(0, 2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_bounded_degree(10, 2, 0, 1), std::invalid_argument);
}

TEST_CASE("generated instances at benchmark scale respect the degree bound") {
    Hypergraph h = generate_bounded_degree(4800, 48, 4, 5);
    CHECK(h.k == 48);
    std::vector<int> degree(h.n, 0);
    for (const auto& e : h.edges)
        for (int v : e) ++degree[v];
    for (int v = 0; v < h.n; ++v) CHECK(degree[v] <= 4);
    CHECK(h.delta <= 48 * 3);
}
