#include "hlc/stats.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "hlc/structures.hpp"

namespace hlc {

QuantileSummary quantiles(std::vector<long> samples) {
    QuantileSummary q;
    if (samples.empty()) return q;
    std::sort(samples.begin(), samples.end());
    auto rank = [&](double p) {
        auto idx = std::size_t(std::ceil(p / 100.0 * double(samples.size())));
        if (idx == 0) idx = 1;
        return samples[idx - 1];
    };
    q.p50 = rank(50);
    q.p90 = rank(90);
    q.p99 = rank(99);
    return q;
}

RunStats collect_stats(const Hypergraph& h, const ColorTape& tape,
                       const Params& params, const RunOutcome& out,
                       double total_seconds, bool timed) {
    RunStats s;
    s.n = h.n;
    s.m = h.m;
    s.k = h.k;
    s.delta = h.delta;
    s.alpha = params.alpha;
    s.seed = tape.seed();
    s.comp_bound = params.component_cap;
    s.trial_budget = params.trials;
    for (int f = 0; f < h.m; ++f)
        if (is_alpha_bad(h, tape, params.alpha, f)) ++s.num_bad_edges;
    s.counters = out.counters;
    s.success = out.success;
    s.failure = out.failure;
    s.total_seconds = total_seconds;
    if (timed) s.query_ns = quantiles(out.query_ns);
    return s;
}

std::string stats_to_json(const RunStats& s) {
    using nlohmann::json;
    json j;
    j["instance"] = {{"n", s.n}, {"m", s.m}, {"k", s.k}, {"delta", s.delta}};
    j["params"] = {{"alpha", s.alpha},
                   {"seed", s.seed},
                   {"comp_bound", s.comp_bound},
                   {"trial_budget", s.trial_budget}};
    json hist_sizes = json::object();
    long num_components = 0;
    for (const auto& [size, count] : s.counters.component_sizes) {
        hist_sizes[std::to_string(size)] = count;
        num_components += count;
    }
    json hist_trials = json::object();
    for (const auto& [trial, count] : s.counters.trials_to_success)
        hist_trials[std::to_string(trial)] = count;
    j["counters"] = {
        {"queries", s.counters.queries},
        {"num_bad_edges", s.num_bad_edges},
        {"num_structures_found", s.counters.structures_found},
        {"num_components", num_components},
        {"component_size_histogram", hist_sizes},
        {"resample_trials_histogram", hist_trials},
        {"resample_steps_total", s.counters.resample_steps},
        {"random_bits_consumed", s.counters.random_bits},
        {"search_nodes", s.counters.search_nodes},
        {"search_budget_exhausted", s.counters.search_budget_exhausted},
        {"color_component_calls", s.counters.color_component_calls},
        {"first_trial_successes", s.counters.first_trial_successes},
        {"trial_exhaustions", s.counters.trial_exhaustions},
        {"audit_violations",
         {{"stability", s.counters.stability_violations},
          {"separation", s.counters.separation_violations},
          {"trace", s.counters.trace_violations},
          {"coverage", s.counters.coverage_violations},
          {"classification", s.counters.classification_violations},
          {"witness_improper", s.counters.witness_improper},
          {"witness_event", s.counters.witness_event_failures},
          {"witness_unjoinable", s.counters.witness_unjoinable}}}};
    j["success"] = s.success;
    if (s.failure)
        j["failure"] = {{"kind", failure_kind_name(s.failure->kind)},
                        {"context", s.failure->context}};
    else
        j["failure"] = nullptr;
    json timing = {{"total_seconds", s.total_seconds}};
    if (s.query_ns)
        timing["query_ns"] = {{"p50", s.query_ns->p50},
                              {"p90", s.query_ns->p90},
                              {"p99", s.query_ns->p99}};
    else
        timing["query_ns"] = nullptr;
    j["timing"] = timing;
    return j.dump();
}

} // namespace hlc
