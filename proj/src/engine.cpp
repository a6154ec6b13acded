#include "hlc/engine.hpp"

#include "hlc/resample.hpp"
#include "hlc/verify.hpp"

#include <algorithm>
#include <chrono>

namespace hlc {

const char* failure_kind_name(FailureKind k) {
    switch (k) {
        case FailureKind::ComponentTooLarge: return "ComponentTooLarge";
        case FailureKind::ColoringTrialsExhausted: return "ColoringTrialsExhausted";
    }
    return "Unknown";
}

TrimmedHypergraph trim_to_component(const Hypergraph& h,
                                    const std::vector<int>& comp_vertices,
                                    double alpha) {
    std::vector<char> in(h.n, 0);
    for (int v : comp_vertices) in[v] = 1;
    long need = trim_min_count(h.k, alpha);
    TrimmedHypergraph t;
    t.vertices = comp_vertices;
    for (int f = 0; f < h.m; ++f) {
        std::vector<int> part;
        for (int v : h.edges[f])
            if (in[v]) part.push_back(v);
        if (long(part.size()) >= need) {
            t.edges.push_back(std::move(part));
            t.source_edge.push_back(f);
        }
    }
    return t;
}

std::vector<int> v1_neighborhood(const Hypergraph& h,
                                 const std::vector<int>& comp_vertices) {
    std::vector<char> in(h.n, 0);
    for (int v : comp_vertices) in[v] = 1;
    std::vector<char> out = in;
    for (int v : comp_vertices)
        for (int f : h.incidence[v])
            for (int u : h.edges[f]) out[u] = 1;
    std::vector<int> res;
    for (int v = 0; v < h.n; ++v)
        if (out[v]) res.push_back(v);
    return res;
}

Engine::Engine(const Hypergraph& h, const ColorTape& tape,
               const Params& params, CheckConfig check)
    : h_(h), tape_(tape), params_(params), check_(check),
      colored_(h.n, 0), current_(h.n, Color::Red), frozen_(h.n, 0),
      comp_of_(h.n, -1), comp_mask_(h.n, 0) {}

void Engine::fail(FailureKind kind, std::string context) {
    failure_ = Failure{kind, std::move(context)};
}

void Engine::write_color(int v, Color c) {
    if (colored_[v]) {
        if (current_[v] != c) ++counters_.stability_violations;
        return; // first write wins; the violation counter records the clash
    }
    colored_[v] = 1;
    current_[v] = c;
}

std::optional<Color> Engine::query(int v) {
    if (failure_) return std::nullopt;
    if (v < 0 || v >= h_.n)
        throw std::out_of_range("query: vertex " + std::to_string(v));
    ++counters_.queries;
    if (colored_[v]) return current_[v];

    SearchDiag diag;
    auto s = find_structure_containing(h_, tape_, params_, v, frozen_, &diag);
    counters_.search_nodes += diag.nodes_visited;
    counters_.search_budget_exhausted += diag.budget_exhausted;

    if (!s) {
        ++counters_.random_bits;
        write_color(v, tape_.initial_color(v));
        return current_[v];
    }
    ++counters_.structures_found;

    auto comp = build_component(*s);
    if (!comp) return std::nullopt;

    int comp_index = int(components_.size());
    auto colors = color_component(*comp, comp_index);
    if (!colors) return std::nullopt;

    commit_component(*comp, *colors);
    return current_[v];
}

std::optional<Component> Engine::build_component(const Structure& s) {
    Component c;
    std::fill(comp_mask_.begin(), comp_mask_.end(), 0);
    auto absorb = [&](int edge, TraceRole role) {
        c.trace.push_back({edge, role});
        for (int v : h_.edges[edge])
            if (!comp_mask_[v]) {
                comp_mask_[v] = 1;
                c.vertices.push_back(v);
            }
    };
    for (int g : s.witnesses) absorb(g, TraceRole::Witness);
    absorb(s.base, TraceRole::Mono);

    while (true) {
        if (long(c.vertices.size()) > params_.component_cap) {
            fail(FailureKind::ComponentTooLarge,
                 "component reached " + std::to_string(c.vertices.size()) +
                     " vertices, cap " + std::to_string(params_.component_cap));
            return std::nullopt;
        }
        if (auto f = find_mono_tail(h_, tape_, params_.alpha, comp_mask_)) {
            absorb(*f, TraceRole::Mono);
            continue;
        }
        SearchDiag diag;
        auto s2 = find_structure_near(h_, tape_, params_, comp_mask_, frozen_,
                                      &diag);
        counters_.search_nodes += diag.nodes_visited;
        counters_.search_budget_exhausted += diag.budget_exhausted;
        if (s2) {
            ++counters_.structures_found;
            for (int g : s2->witnesses) absorb(g, TraceRole::Witness);
            absorb(s2->base, TraceRole::Mono);
            continue;
        }
        break;
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    return c;
}

std::optional<std::vector<Color>> Engine::color_component(const Component& c,
                                                          int comp_index) {
    ++counters_.color_component_calls;
    TrimmedHypergraph t = trim_to_component(h_, c.vertices, params_.alpha);

    // Local ids for the resampler.
    std::vector<int> local_of(h_.n, -1);
    for (std::size_t i = 0; i < t.vertices.size(); ++i)
        local_of[t.vertices[i]] = int(i);
    ResampleProblem p;
    p.num_vertices = int(t.vertices.size());
    for (const auto& e : t.edges) {
        std::vector<int> le;
        for (int v : e) le.push_back(local_of[v]);
        p.edges.push_back(std::move(le));
    }

    long et = 1;
    if (params_.delta > 0)
        et = std::max<long>(
            1, (long(p.edges.size()) + params_.delta - 1) / params_.delta);
    long steps = 2 * et;

    for (int trial = 1; trial <= params_.trials; ++trial) {
        BitStream bits{&tape_, engine_stream(comp_index, trial)};
        std::vector<Color> init(p.num_vertices);
        for (auto& col : init) col = bits.next_color();
        ResampleResult rr = mt_resample(p, init, steps, bits);
        counters_.resample_steps += rr.steps_used;
        counters_.random_bits += long(bits.consumed());
        if (rr.success) {
            ++counters_.trials_to_success[trial];
            if (trial == 1) ++counters_.first_trial_successes;
            std::vector<Color> out(h_.n, Color::Red);
            for (std::size_t i = 0; i < t.vertices.size(); ++i)
                out[t.vertices[i]] = rr.coloring[int(i)];
            return out;
        }
    }
    ++counters_.trial_exhaustions;
    fail(FailureKind::ColoringTrialsExhausted,
         "component " + std::to_string(comp_index) + ": " +
             std::to_string(params_.trials) + " trials of " +
             std::to_string(steps) + " steps each");
    return std::nullopt;
}

void Engine::commit_component(const Component& c,
                              const std::vector<Color>& colors) {
    int idx = int(components_.size());
    for (int v : c.vertices) {
        write_color(v, colors[v]);
        frozen_[v] = 1;
        comp_of_[v] = idx;
    }
    auto v1 = v1_neighborhood(h_, c.vertices);
    for (int u : v1) {
        if (comp_of_[u] == idx) continue;
        ++counters_.random_bits;
        write_color(u, tape_.initial_color(u));
    }
    components_.push_back(c);
    ++counters_.component_sizes[long(c.vertices.size())];
    if (check_.audits || check_.witness_checks) audit_component(c);
}

void Engine::audit_component(const Component& c) {
    if (check_.audits) {
        // Separation: no edge may meet two components.
        for (int f = 0; f < h_.m; ++f) {
            int seen = -2;
            for (int v : h_.edges[f]) {
                int ci = comp_of_[v];
                if (ci < 0) continue;
                if (seen == -2)
                    seen = ci;
                else if (seen != ci) {
                    ++counters_.separation_violations;
                    break;
                }
            }
        }
        // Trace replay: every entry contributes at least (1-alpha)k
        // one-colored new vertices; Mono entries a monochromatic set.
        long weak_min = weak_min_count(params_.k, params_.alpha);
        std::vector<char> acc(h_.n, 0);
        for (const auto& [edge, role] : c.trace) {
            long red = 0, blue = 0;
            for (int v : h_.edges[edge]) {
                if (acc[v]) continue;
                (tape_.initial_color(v) == Color::Red ? red : blue)++;
            }
            long fresh = red + blue;
            bool ok = role == TraceRole::Mono
                          ? fresh >= weak_min && (red == fresh || blue == fresh)
                          : std::max(red, blue) >= weak_min;
            if (!ok) ++counters_.trace_violations;
            for (int v : h_.edges[edge]) acc[v] = 1;
        }
        // Structure coverage: each Mono entry with its preceding
        // intersecting trace edges forms a valid structure.
        for (std::size_t j = 0; j < c.trace.size(); ++j) {
            if (c.trace[j].second != TraceRole::Mono) continue;
            Structure s;
            s.base = c.trace[j].first;
            std::vector<char> in_base(h_.n, 0);
            for (int v : h_.edges[s.base]) in_base[v] = 1;
            for (std::size_t i = 0; i < j; ++i) {
                int g = c.trace[i].first;
                bool meets = false;
                for (int v : h_.edges[g])
                    if (in_base[v]) {
                        meets = true;
                        break;
                    }
                if (meets) s.witnesses.push_back(g);
            }
            if (!validate_structure(h_, tape_, params_.alpha, s))
                ++counters_.coverage_violations;
        }
    }
    if (check_.witness_checks) {
        try {
            WitnessTree t = join_forest(h_, build_witness_forest(h_, c.trace));
            if (!is_proper(h_, params_.alpha, t).proper)
                ++counters_.witness_improper;
            if (!event_holds(h_, tape_, params_.alpha, t))
                ++counters_.witness_event_failures;
        } catch (const WitnessJoinError&) {
            ++counters_.witness_unjoinable;
        }
    }
}

void Engine::final_audit() {
    if (!check_.audits) return;
    std::vector<std::vector<int>> comps;
    for (const auto& c : components_) comps.push_back(c.vertices);
    try {
        auto classes = classify_edges(h_, comps, params_.alpha);
        for (int f = 0; f < h_.m; ++f) {
            const auto& e = h_.edges[f];
            long red = 0, blue = 0;
            auto initial_counts = [&](bool outside_only) {
                red = blue = 0;
                for (int v : e) {
                    if (outside_only && comp_of_[v] >= 0) continue;
                    (tape_.initial_color(v) == Color::Red ? red : blue)++;
                }
            };
            switch (classes[f]) {
                case EdgeClass::E1:
                    initial_counts(false);
                    if (red == 0 || blue == 0) ++counters_.classification_violations;
                    break;
                case EdgeClass::E2:
                    initial_counts(true);
                    if (red == 0 || blue == 0) ++counters_.classification_violations;
                    break;
                case EdgeClass::E3: {
                    long r = 0, b = 0;
                    for (int v : e) (current_[v] == Color::Red ? r : b)++;
                    if (r == 0 || b == 0) ++counters_.classification_violations;
                    break;
                }
            }
        }
    } catch (const std::exception&) {
        ++counters_.classification_violations;
    }
}

RunOutcome run_complete(const Hypergraph& h, const ColorTape& tape,
                        const Params& params, const std::vector<int>& order,
                        CheckConfig check, bool time_queries) {
    Engine eng(h, tape, params, check);
    RunOutcome out;
    if (time_queries) out.query_ns.reserve(order.size());
    for (int v : order) {
        if (time_queries) {
            auto t0 = std::chrono::steady_clock::now();
            auto c = eng.query(v);
            auto t1 = std::chrono::steady_clock::now();
            out.query_ns.push_back(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                    .count());
            if (!c) break;
        } else {
            if (!eng.query(v)) break;
        }
    }
    if (!eng.failure()) {
        bool all = true;
        for (int v = 0; v < h.n; ++v)
            if (!eng.is_colored(v)) {
                all = false;
                break;
            }
        if (all) {
            eng.final_audit();
            out.success = true;
            out.coloring.resize(h.n);
            for (int v = 0; v < h.n; ++v) out.coloring[v] = eng.current_color(v);
        }
    }
    out.failure = eng.failure();
    out.counters = eng.counters();
    out.components = eng.components();
    return out;
}

std::vector<int> random_order(int n, const ColorTape& tape) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    // Unbiased Fisher-Yates driven by the tape's query-order stream.
    BitStream bits{&tape, stream_tag::query_order};
    auto draw_below = [&](std::uint64_t bound) {
        // Assemble 64-bit words from stream bits; rejection keeps uniformity.
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
        for (;;) {
            std::uint64_t w = 0;
            for (int b = 0; b < 64; ++b) w = (w << 1) | std::uint64_t(bits.next());
            if (w < limit) return w % bound;
        }
    };
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[draw_below(i)]);
    return order;
}

std::vector<int> ascending_order(int n) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    return order;
}

} // namespace hlc
