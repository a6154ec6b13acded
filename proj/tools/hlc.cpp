#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hlc/baseline.hpp"
#include "hlc/engine.hpp"
#include "hlc/generator.hpp"
#include "hlc/hypergraph.hpp"
#include "hlc/params.hpp"
#include "hlc/resample.hpp"
#include "hlc/stats.hpp"
#include "hlc/sweep.hpp"
#include "hlc/verify.hpp"
#include "hlc/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRunFailed = 2;

hlc::Hypergraph load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return hlc::parse_hypergraph(buf.str());
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

// One R/B line per vertex; the vertex id is the line number.
std::string coloring_text(const std::vector<hlc::Color>& coloring) {
    std::string s;
    s.reserve(2 * coloring.size());
    for (hlc::Color c : coloring) {
        s.push_back(hlc::color_char(c));
        s.push_back('\n');
    }
    return s;
}

std::vector<hlc::Color> load_coloring(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coloring file: " + path);
    std::vector<hlc::Color> coloring;
    char ch;
    while (in.get(ch)) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == 'R')
            coloring.push_back(hlc::Color::Red);
        else if (ch == 'B')
            coloring.push_back(hlc::Color::Blue);
        else
            throw std::runtime_error(std::string("bad color character '") + ch +
                                     "' in " + path);
    }
    if (int(coloring.size()) != n)
        throw std::runtime_error("coloring has " +
                                 std::to_string(coloring.size()) +
                                 " entries, instance has " + std::to_string(n));
    return coloring;
}

// HLC_DEBUG_ASSERTS=1 switches on the expensive per-component invariant
// checks (trace replay, structure coverage, witness properness).
hlc::CheckConfig debug_checks() {
    hlc::CheckConfig check;
    const char* env = std::getenv("HLC_DEBUG_ASSERTS");
    if (env && std::string(env) == "1") {
        check.audits = true;
        check.witness_checks = true;
    }
    return check;
}

long auto_steps(long m, long flag_value) {
    return flag_value > 0 ? flag_value : 64 * m + 1024;
}

int cmd_gen(int n, int k, int d, std::uint64_t seed, const std::string& out) {
    auto h = hlc::generate_bounded_degree(n, k, d, seed);
    write_text(out, hlc::serialize_hypergraph(h));
    return kExitOk;
}

int cmd_color(const std::string& in, std::uint64_t seed, double alpha,
              const std::string& algo, const std::string& order_name,
              std::optional<long> cap, long max_steps, int threads,
              const std::string& out, const std::string& stats_out) {
    auto h = load_instance(in);
    hlc::ColorTape tape(seed, h.n);
    nlohmann::json j;
    j["algo"] = algo;
    std::vector<hlc::Color> coloring;
    bool success = false;

    if (algo == "lca") {
        auto params = hlc::Params::make(h, alpha, cap);
        auto order = order_name == "ascending" ? hlc::ascending_order(h.n)
                                               : hlc::random_order(h.n, tape);
        auto t0 = std::chrono::steady_clock::now();
        auto outc = hlc::run_complete(h, tape, params, order, debug_checks());
        auto t1 = std::chrono::steady_clock::now();
        auto stats = hlc::collect_stats(
            h, tape, params, outc,
            std::chrono::duration<double>(t1 - t0).count(), false);
        success = outc.success;
        coloring = std::move(outc.coloring);
        write_text(stats_out, hlc::stats_to_json(stats) + "\n");
        if (!coloring.empty()) write_text(out, coloring_text(coloring));
        return success ? kExitOk : kExitRunFailed;
    }

    if (algo == "alon") {
        auto params = hlc::Params::make(h, alpha, cap);
        if (!hlc::check_degree_condition(params.k, params.delta, params.alpha))
            std::cerr << "warning: degree condition fails for k=" << params.k
                      << " delta=" << params.delta << " alpha=" << params.alpha
                      << "\n";
        auto res = hlc::alon_color(h, tape, params, threads);
        success = res.success;
        coloring = std::move(res.coloring);
        j["success"] = success;
        j["failed_component"] = res.failed_component;
        j["stats"] = {{"bad_edges", res.stats.bad_edges},
                      {"components_before_merge",
                       res.stats.components_before_merge},
                      {"components", res.stats.components},
                      {"largest_component", res.stats.largest_component},
                      {"trimmed_edges", res.stats.trimmed_edges},
                      {"resample_steps", res.stats.resample_steps},
                      {"random_bits", res.stats.random_bits},
                      {"degree_condition_ok", res.stats.degree_condition_ok}};
    } else if (algo == "mt") {
        auto p = hlc::problem_from(h);
        std::vector<hlc::Color> init(h.n);
        for (int v = 0; v < h.n; ++v) init[v] = tape.initial_color(v);
        hlc::BitStream bits{&tape, hlc::stream_tag::standalone_mt};
        auto rr = hlc::mt_resample(p, init, auto_steps(h.m, max_steps), bits);
        success = rr.success;
        coloring = std::move(rr.coloring);
        j["success"] = success;
        j["steps_used"] = rr.steps_used;
        j["random_bits"] = bits.consumed();
    } else if (algo == "conservative") {
        hlc::BitStream bits{&tape, hlc::stream_tag::conservative};
        auto cr = hlc::conservative_resample(h, alpha, tape,
                                             auto_steps(h.m, max_steps), bits);
        success = cr.result.success;
        coloring = std::move(cr.result.coloring);
        long touched = 0;
        for (char c : cr.resampled) touched += c;
        j["success"] = success;
        j["steps_used"] = cr.result.steps_used;
        j["resampled_vertices"] = touched;
        j["random_bits"] = bits.consumed();
    } else {
        throw CLI::ValidationError("--algo", "unknown algorithm: " + algo);
    }

    write_text(stats_out, j.dump() + "\n");
    if (!coloring.empty()) write_text(out, coloring_text(coloring));
    return success ? kExitOk : kExitRunFailed;
}

int cmd_query(const std::string& in, std::uint64_t seed, double alpha,
              const std::vector<int>& vertices, std::optional<long> cap) {
    if (vertices.empty())
        throw CLI::ValidationError("--vertices", "at least one vertex required");
    auto h = load_instance(in);
    hlc::ColorTape tape(seed, h.n);
    auto params = hlc::Params::make(h, alpha, cap);
    hlc::Engine eng(h, tape, params, debug_checks());
    for (int v : vertices) {
        auto c = eng.query(v);
        if (!c) {
            std::cout << "FAIL "
                      << hlc::failure_kind_name(eng.failure()->kind) << "\n";
            return kExitRunFailed;
        }
        std::cout << v << " " << hlc::color_char(*c) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& in, const std::string& coloring_path) {
    auto h = load_instance(in);
    auto coloring = load_coloring(coloring_path, h.n);
    auto check = hlc::is_proper_coloring(h, coloring);
    for (int f : check.violating) std::cout << f << "\n";
    return check.proper ? kExitOk : kExitUsage;
}

int cmd_params(int k, double alpha, std::optional<long> delta,
               std::optional<long> m, const std::string& in) {
    if (!in.empty()) {
        auto h = load_instance(in);
        k = h.k;
        delta = h.delta;
        m = h.m;
    }
    if (k <= 0) throw CLI::ValidationError("--k", "k must be positive");
    nlohmann::json j;
    j["alpha_A"] = hlc::solve_threshold(hlc::Threshold::AlphaA);
    j["alpha_B"] = hlc::solve_threshold(hlc::Threshold::AlphaB);
    j["alpha_star"] = hlc::solve_threshold(hlc::Threshold::AlphaStar);
    j["alpha_0"] = hlc::solve_threshold(hlc::Threshold::Alpha0);
    auto b = hlc::prob_bounds(k, alpha);
    j["log2_pm"] = b.log2_pm;
    j["log2_pw"] = b.log2_pw;
    j["log2_q"] = b.log2_q;
    if (delta) {
        auto sec = hlc::check_secondary_conditions(k, *delta, alpha);
        j["cond_theorem2"] = hlc::check_degree_condition(k, *delta, alpha);
        j["cond_alon"] = sec.alon;
        j["cond_remark"] = sec.improved_alon;
        j["cond_main"] = sec.main;
        j["cond_witness"] = hlc::witness_condition(*delta, k, alpha);
    } else {
        j["cond_theorem2"] = nullptr;
        j["cond_alon"] = nullptr;
        j["cond_remark"] = nullptr;
        j["cond_main"] = nullptr;
        j["cond_witness"] = nullptr;
    }
    if (m) {
        j["comp_bound"] = hlc::comp_bound(k, *m);
        j["trial_budget"] = hlc::trial_budget(*m);
    } else {
        j["comp_bound"] = nullptr;
        j["trial_budget"] = nullptr;
    }
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_witness(const std::string& in, std::uint64_t seed, double alpha,
                std::optional<long> cap) {
    auto h = load_instance(in);
    hlc::ColorTape tape(seed, h.n);
    auto params = hlc::Params::make(h, alpha, cap);
    auto order = hlc::random_order(h.n, tape);
    auto outc = hlc::run_complete(h, tape, params, order);
    auto bounds = hlc::prob_bounds(h.k, alpha);
    for (std::size_t i = 0; i < outc.components.size(); ++i) {
        const auto& comp = outc.components[i];
        nlohmann::json j;
        j["component"] = i;
        j["size"] = comp.vertices.size();
        j["trace_len"] = comp.trace.size();
        try {
            auto tree = hlc::join_forest(
                h, hlc::build_witness_forest(h, comp.trace));
            auto rep = hlc::is_proper(h, alpha, tree);
            auto eb = hlc::event_prob_bound(tree, bounds);
            nlohmann::json nodes = nlohmann::json::array();
            for (const auto& node : tree.nodes) {
                const char* label = node.label == hlc::NodeLabel::M   ? "M"
                                    : node.label == hlc::NodeLabel::W ? "W"
                                                                      : "J";
                nodes.push_back({{"edge", node.edge},
                                 {"label", label},
                                 {"depth", node.depth},
                                 {"out", node.out}});
            }
            j["nodes"] = nodes;
            j["n_m"] = tree.count(hlc::NodeLabel::M);
            j["n_w"] = tree.count(hlc::NodeLabel::W);
            j["n_j"] = tree.count(hlc::NodeLabel::J);
            j["proper"] = rep.proper;
            if (!rep.proper) j["violation"] = rep.violation;
            j["event_holds"] = hlc::event_holds(h, tape, alpha, tree);
            j["log2_event_bound"] = eb.log2_product;
            j["log2_qu_bound"] = eb.log2_qu;
        } catch (const hlc::WitnessJoinError& e) {
            j["unjoinable_subcomponents"] = e.remaining;
        }
        std::cout << j.dump() << "\n";
    }
    nlohmann::json summary;
    summary["summary"] = true;
    summary["success"] = outc.success;
    summary["components"] = outc.components.size();
    summary["witness_condition"] =
        hlc::witness_condition(params.delta, h.k, alpha);
    auto ub = hlc::union_bound_failure(params, bounds);
    if (ub)
        summary["union_bound_log2"] = *ub;
    else
        summary["union_bound_log2"] = nullptr;
    std::cout << summary.dump() << "\n";
    return outc.success ? kExitOk : kExitRunFailed;
}

int cmd_bench(const std::vector<int>& ns, int k, int d, double alpha,
              int seeds, std::uint64_t seed0, const std::string& order_name,
              int threads, const std::string& out) {
    std::vector<hlc::RunSpec> specs;
    for (int n : ns)
        for (int s = 0; s < seeds; ++s) {
            hlc::RunSpec spec;
            spec.n = n;
            spec.k = k;
            spec.d = d;
            spec.alpha = alpha;
            spec.seed = seed0 + std::uint64_t(s);
            spec.order = order_name == "ascending" ? hlc::QueryOrder::Ascending
                                                   : hlc::QueryOrder::Random;
            spec.check = debug_checks();
            spec.time_queries = true;
            specs.push_back(spec);
        }
    auto stats = hlc::run_sweep(specs, threads);
    std::string lines;
    for (const auto& s : stats) lines += hlc::stats_to_json(s) + "\n";
    write_text(out, lines);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local hypergraph 2-coloring: query engine, batch baselines, "
                 "parameter calculators, and benchmarks"};
    app.require_subcommand(1);

    // gen
    int g_n = 0, g_k = 0, g_d = 0;
    std::uint64_t g_seed = 1;
    std::string g_out = "-";
    auto* gen = app.add_subcommand("gen", "Generate a k-uniform instance with "
                                          "bounded vertex degree");
    gen->add_option("--n", g_n, "number of vertices")->required();
    gen->add_option("--k", g_k, "edge size")->required();
    gen->add_option("--d", g_d, "max vertex degree")->required();
    gen->add_option("--seed", g_seed, "generator seed");
    gen->add_option("--out", g_out, "output file (- for stdout)");

    // color
    std::string c_in, c_algo = "lca", c_order = "random", c_out = "-",
                c_stats = "-";
    std::uint64_t c_seed = 1;
    double c_alpha = 0.22;
    long c_cap = 0, c_steps = 0;
    int c_threads = 1;
    auto* color = app.add_subcommand("color", "Compute a full proper coloring");
    color->add_option("--in", c_in, "instance file")->required();
    color->add_option("--seed", c_seed, "tape seed");
    color->add_option("--alpha", c_alpha, "badness parameter");
    color->add_option("--algo", c_algo,
                      "algorithm: lca | alon | mt | conservative");
    color->add_option("--order", c_order, "query order: random | ascending");
    color->add_option("--cap", c_cap, "component size cap override");
    color->add_option("--max-steps", c_steps,
                      "resample step budget for mt/conservative (0 = auto)");
    color->add_option("--threads", c_threads, "worker threads (alon phase 2)");
    color->add_option("--out", c_out, "coloring output file");
    color->add_option("--stats", c_stats, "stats JSON output file");

    // query
    std::string q_in;
    std::uint64_t q_seed = 1;
    double q_alpha = 0.22;
    long q_cap = 0;
    std::vector<int> q_vertices;
    auto* query = app.add_subcommand("query", "Answer per-vertex color queries");
    query->add_option("--in", q_in, "instance file")->required();
    query->add_option("--seed", q_seed, "tape seed");
    query->add_option("--alpha", q_alpha, "badness parameter");
    query->add_option("--cap", q_cap, "component size cap override");
    query->add_option("--vertex", q_vertices, "vertex to query (repeatable)");
    query->add_option("--vertices", q_vertices,
                      "comma-separated vertices to query")
        ->delimiter(',');

    // verify
    std::string v_in, v_coloring;
    auto* verify = app.add_subcommand("verify", "Check a coloring is proper");
    verify->add_option("--in", v_in, "instance file")->required();
    verify->add_option("--coloring", v_coloring, "coloring file")->required();

    // params
    int p_k = 0;
    double p_alpha = 0.22;
    long p_delta = -1, p_m = -1;
    std::string p_in;
    auto* params = app.add_subcommand("params", "Evaluate thresholds and "
                                                "feasibility conditions");
    params->add_option("--k", p_k, "edge size");
    params->add_option("--alpha", p_alpha, "badness parameter");
    params->add_option("--delta", p_delta, "max edge degree");
    params->add_option("--m", p_m, "edge count");
    params->add_option("--in", p_in, "derive k/delta/m from an instance file");

    // witness
    std::string w_in;
    std::uint64_t w_seed = 1;
    double w_alpha = 0.22;
    long w_cap = 0;
    auto* witness = app.add_subcommand(
        "witness", "Run a complete computation and report per-component "
                   "witness-tree diagnostics as JSON lines");
    witness->add_option("--in", w_in, "instance file")->required();
    witness->add_option("--seed", w_seed, "tape seed");
    witness->add_option("--alpha", w_alpha, "badness parameter");
    witness->add_option("--cap", w_cap, "component size cap override");

    // bench
    std::vector<int> b_ns;
    int b_k = 48, b_d = 4, b_seeds = 1, b_threads = 1;
    double b_alpha = 0.22;
    std::uint64_t b_seed0 = 1;
    std::string b_order = "random", b_out = "-";
    auto* bench = app.add_subcommand(
        "bench", "Generate-and-run a family, one stats JSON line per run");
    bench->add_option("--n", b_ns, "instance sizes (repeatable)")->required();
    bench->add_option("--k", b_k, "edge size");
    bench->add_option("--d", b_d, "max vertex degree");
    bench->add_option("--alpha", b_alpha, "badness parameter");
    bench->add_option("--seeds", b_seeds, "seeds per size");
    bench->add_option("--seed0", b_seed0, "first seed");
    bench->add_option("--order", b_order, "query order: random | ascending");
    bench->add_option("--threads", b_threads, "parallel runs");
    bench->add_option("--out", b_out, "output file (- for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(g_n, g_k, g_d, g_seed, g_out);
        if (color->parsed())
            return cmd_color(c_in, c_seed, c_alpha, c_algo, c_order,
                             c_cap > 0 ? std::optional<long>(c_cap)
                                       : std::nullopt,
                             c_steps, c_threads, c_out, c_stats);
        if (query->parsed())
            return cmd_query(q_in, q_seed, q_alpha, q_vertices,
                             q_cap > 0 ? std::optional<long>(q_cap)
                                       : std::nullopt);
        if (verify->parsed()) return cmd_verify(v_in, v_coloring);
        if (params->parsed())
            return cmd_params(p_k, p_alpha,
                              p_delta >= 0 ? std::optional<long>(p_delta)
                                           : std::nullopt,
                              p_m >= 0 ? std::optional<long>(p_m)
                                       : std::nullopt,
                              p_in);
        if (witness->parsed())
            return cmd_witness(w_in, w_seed, w_alpha,
                               w_cap > 0 ? std::optional<long>(w_cap)
                                         : std::nullopt);
        if (bench->parsed())
            return cmd_bench(b_ns, b_k, b_d, b_alpha, b_seeds, b_seed0,
                             b_order, b_threads, b_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
