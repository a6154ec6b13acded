#pragma once

#include "hlc/hypergraph.hpp"
#include "hlc/params.hpp"
#include "hlc/structures.hpp"
#include "hlc/tape.hpp"
#include "hlc/witness.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hlc {

enum class FailureKind { ComponentTooLarge, ColoringTrialsExhausted };

const char* failure_kind_name(FailureKind k);

struct Failure {
    FailureKind kind;
    std::string context;
};

// Component of recolored vertices plus the ordered trace of absorbed edges.
struct Component {
    std::vector<int> vertices; // sorted
    Trace trace;
};

// Restriction of the parent hypergraph to a component: edges meeting the
// component in at least alpha*k vertices, trimmed to the component. Vertex
// ids stay global; source_edge maps back to parent edge ids.
struct TrimmedHypergraph {
    std::vector<int> vertices;
    std::vector<std::vector<int>> edges;
    std::vector<int> source_edge;
};

TrimmedHypergraph trim_to_component(const Hypergraph& h,
                                    const std::vector<int>& comp_vertices,
                                    double alpha);

// Component vertices plus every vertex sharing an edge with them, sorted.
std::vector<int> v1_neighborhood(const Hypergraph& h,
                                 const std::vector<int>& comp_vertices);

// audits: trace replay, structure coverage, component separation, color
// stability, edge classification at completion. witness_checks additionally
// builds and checks a witness tree per component. Both off by default; they
// change counters only, never colors.
struct CheckConfig {
    bool audits = false;
    bool witness_checks = false;
};

struct EngineCounters {
    long queries = 0;
    long structures_found = 0;
    long search_nodes = 0;
    long search_budget_exhausted = 0;
    long color_component_calls = 0;
    long first_trial_successes = 0;
    long trial_exhaustions = 0;
    long resample_steps = 0;
    long random_bits = 0;
    std::map<long, long> component_sizes;   // size -> count
    std::map<int, long> trials_to_success;  // 1-based trial -> count
    // Audit counters; all stay zero on healthy runs.
    long stability_violations = 0;
    long separation_violations = 0;
    long trace_violations = 0;
    long coverage_violations = 0;
    long classification_violations = 0;
    long witness_improper = 0;
    long witness_event_failures = 0;
    long witness_unjoinable = 0;
};

// One in-progress computation over a fixed (hypergraph, tape, params)
// triple. Strictly serial: one query at a time. A failure is sticky; every
// later query reports it without further work.
class Engine {
public:
    Engine(const Hypergraph& h, const ColorTape& tape, const Params& params,
           CheckConfig check = {});

    // Color of v consistent with one global proper coloring, or nullopt
    // after a failure (failure() has the record).
    std::optional<Color> query(int v);

    bool is_colored(int v) const { return colored_[v] != 0; }
    Color current_color(int v) const { return current_[v]; }
    const std::optional<Failure>& failure() const { return failure_; }
    const std::vector<Component>& components() const { return components_; }
    const EngineCounters& counters() const { return counters_; }
    const Params& params() const { return params_; }

    // Runs the end-of-computation audits (edge classification); counted in
    // counters(). Requires every vertex colored.
    void final_audit();

private:
    std::optional<Component> build_component(const Structure& s);
    std::optional<std::vector<Color>> color_component(const Component& c,
                                                      int comp_index);
    void write_color(int v, Color c);
    void commit_component(const Component& c, const std::vector<Color>& colors);
    void audit_component(const Component& c);
    void fail(FailureKind kind, std::string context);

    const Hypergraph& h_;
    const ColorTape& tape_;
    Params params_;
    CheckConfig check_;
    std::vector<char> colored_;
    std::vector<Color> current_;
    std::vector<char> frozen_;  // union of completed components
    std::vector<int> comp_of_;  // component index per vertex, -1 outside
    std::vector<Component> components_;
    std::optional<Failure> failure_;
    EngineCounters counters_;
    std::vector<char> comp_mask_; // scratch for the component under build
};

struct RunOutcome {
    bool success = false;
    std::optional<Failure> failure;
    std::vector<Color> coloring; // full only on success
    EngineCounters counters;
    std::vector<Component> components;
    std::vector<long> query_ns; // per-query wall clock, when timing is on
};

// Queries every vertex in `order` (must cover 0..n-1), then runs final
// audits. time_queries records a wall-clock sample per query.
RunOutcome run_complete(const Hypergraph& h, const ColorTape& tape,
                        const Params& params, const std::vector<int>& order,
                        CheckConfig check = {}, bool time_queries = false);

// Seeded Fisher-Yates permutation of 0..n-1 for randomized query order.
std::vector<int> random_order(int n, const ColorTape& tape);
std::vector<int> ascending_order(int n);

} // namespace hlc
