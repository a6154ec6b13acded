#include "hlc/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hlc {

namespace {

// Distinct edges seen by edge f through shared vertices, counted with a
// stamp array so each pass is O(sum of incident list lengths).
long edge_degree_one(const Hypergraph& h, int f, std::vector<int>& stamp,
                     int tag) {
    long deg = 0;
    for (int v : h.edges[f]) {
        for (int g : h.incidence[v]) {
            if (g == f || stamp[g] == tag) continue;
            stamp[g] = tag;
            ++deg;
        }
    }
    return deg;
}

} // namespace

long max_edge_degree(const Hypergraph& h, int threads) {
    long best = 0;
    if (threads > 1) {
#ifdef _OPENMP
#pragma omp parallel num_threads(threads) reduction(max : best)
        {
            std::vector<int> stamp(h.m, -1);
#pragma omp for schedule(dynamic, 64)
            for (int f = 0; f < h.m; ++f)
                best = std::max(best, edge_degree_one(h, f, stamp, f));
        }
        return best;
#endif
    }
    std::vector<int> stamp(h.m, -1);
    for (int f = 0; f < h.m; ++f)
        best = std::max(best, edge_degree_one(h, f, stamp, f));
    return best;
}

Hypergraph make_hypergraph(int n, int k, std::vector<std::vector<int>> edges,
                           int threads) {
    if (n < 1) throw std::invalid_argument("hypergraph: n must be >= 1");
    if (k < 1) throw std::invalid_argument("hypergraph: k must be >= 1");
    Hypergraph h;
    h.n = n;
    h.k = k;
    h.m = int(edges.size());
    if (h.m < 1) throw std::invalid_argument("hypergraph: m must be >= 1");
    h.edges = std::move(edges);

    for (int f = 0; f < h.m; ++f) {
        auto& e = h.edges[f];
        if (int(e.size()) != k)
            throw std::invalid_argument("hypergraph: edge " + std::to_string(f) +
                                        " has " + std::to_string(e.size()) +
                                        " vertices, expected " + std::to_string(k));
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n)
                throw std::invalid_argument("hypergraph: edge " + std::to_string(f) +
                                            " has vertex " + std::to_string(e[i]) +
                                            " outside [0, " + std::to_string(n) + ")");
            if (i > 0 && e[i] == e[i - 1])
                throw std::invalid_argument("hypergraph: edge " + std::to_string(f) +
                                            " repeats vertex " + std::to_string(e[i]));
        }
    }

    std::map<std::vector<int>, int> seen;
    for (int f = 0; f < h.m; ++f) {
        auto [it, fresh] = seen.emplace(h.edges[f], f);
        if (!fresh)
            throw std::invalid_argument("hypergraph: edge " + std::to_string(f) +
                                        " duplicates edge " + std::to_string(it->second));
    }

    h.incidence.assign(n, {});
    for (int f = 0; f < h.m; ++f)
        for (int v : h.edges[f]) h.incidence[v].push_back(f);
    for (int v = 0; v < n; ++v)
        if (h.incidence[v].empty())
            throw std::invalid_argument("hypergraph: vertex " + std::to_string(v) +
                                        " is isolated");

    h.delta = max_edge_degree(h, threads);
    return h;
}

Hypergraph parse_hypergraph(std::string_view text, int threads) {
    int n = -1, m = -1, k = -1;
    std::vector<std::vector<int>> edges;
    std::map<std::vector<int>, int> edge_lines;
    int lineno = 0;
    std::size_t pos = 0;
    int header_line = 0;

    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;

        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string_view::npos) continue;
        line = line.substr(b);
        if (line[0] == 'c') continue;

        std::istringstream iss{std::string(line)};
        std::string tok;
        iss >> tok;
        if (tok == "p") {
            if (n != -1) throw ParseError(lineno, "duplicate problem line");
            std::string fmt;
            if (!(iss >> fmt >> n >> m >> k) || fmt != "khyp")
                throw ParseError(lineno, "malformed problem line, expected 'p khyp <n> <m> <k>'");
            if (n < 1 || m < 1 || k < 1)
                throw ParseError(lineno, "problem line requires n, m, k >= 1");
            std::string extra;
            if (iss >> extra) throw ParseError(lineno, "trailing tokens on problem line");
            header_line = lineno;
        } else if (tok == "e") {
            if (n == -1) throw ParseError(lineno, "edge line before problem line");
            std::vector<int> e;
            int v;
            while (iss >> v) e.push_back(v);
            if (!iss.eof()) throw ParseError(lineno, "non-integer vertex id");
            if (int(e.size()) != k)
                throw ParseError(lineno, "edge has " + std::to_string(e.size()) +
                                             " vertices, expected " + std::to_string(k));
            for (int u : e)
                if (u < 0 || u >= n)
                    throw ParseError(lineno, "vertex " + std::to_string(u) +
                                                 " outside [0, " + std::to_string(n) + ")");
            std::vector<int> s = e;
            std::sort(s.begin(), s.end());
            for (std::size_t i = 1; i < s.size(); ++i)
                if (s[i] == s[i - 1])
                    throw ParseError(lineno, "edge repeats vertex " + std::to_string(s[i]));
            if (int(edges.size()) == m)
                throw ParseError(lineno, "more than " + std::to_string(m) + " edge lines");
            auto [it, fresh] = edge_lines.emplace(s, lineno);
            if (!fresh)
                throw ParseError(lineno, "duplicate of edge on line " +
                                             std::to_string(it->second));
            edges.push_back(std::move(s));
        } else {
            throw ParseError(lineno, "unknown line type '" + tok + "'");
        }
    }

    if (n == -1) throw ParseError(lineno, "missing problem line");
    if (int(edges.size()) != m)
        throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));

    try {
        return make_hypergraph(n, k, std::move(edges), threads);
    } catch (const std::invalid_argument& e) {
        throw ParseError(header_line, e.what());
    }
}

std::string serialize_hypergraph(const Hypergraph& h) {
    std::string out;
    out += "p khyp " + std::to_string(h.n) + " " + std::to_string(h.m) + " " +
           std::to_string(h.k) + "\n";
    for (const auto& e : h.edges) {
        out += 'e';
        for (int v : e) {
            out += ' ';
            out += std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

std::vector<int> neighbors(const Hypergraph& h, int f) {
    if (f < 0 || f >= h.m)
        throw std::out_of_range("neighbors: edge id " + std::to_string(f));
    std::vector<int> out;
    for (int v : h.edges[f])
        for (int g : h.incidence[v])
            if (g != f) out.push_back(g);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace hlc
