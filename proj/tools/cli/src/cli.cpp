#include "pdzf/cli.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdzf/bounds.hpp"
#include "pdzf/constructions.hpp"
#include "pdzf/decomposition.hpp"
#include "pdzf/error.hpp"
#include "pdzf/forts.hpp"
#include "pdzf/graph.hpp"
#include "pdzf/propagation.hpp"
#include "pdzf/solver.hpp"

namespace pdzf::cli {
namespace {

using Json = nlohmann::ordered_json;

// Every flag of every subcommand. Each subcommand reads only its own.
struct Args {
    std::string graph;
    std::string mode = "pd";
    std::string x;
    std::string set;
    std::string method = "cg";
    std::string separator;
    bool min_forts = false;
    std::size_t max_n = 16;
    std::optional<std::string> violated_by;
    std::string family;
    std::vector<long long> params;
    std::string split = "auto";
    std::size_t jobs = 1;
    std::string kind;
    std::string descriptor;
    bool audit = false;
    std::optional<std::string> part;
    std::optional<std::string> s;
    std::size_t cap = 1'000'000;
    long long v = -1;
};

// ---------------------------------------------------------------------------
// Parsing helpers

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

/// "0,3,5" -> {0, 3, 5}; the empty string is the empty list.
std::vector<Vertex> parse_ids(const std::string& text, std::string_view what) {
    std::vector<Vertex> out;
    if (trim(text).empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string t = trim(item);
        unsigned long long value = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
        if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
            throw InputError(std::string(what) + ": '" + t + "' is not a vertex id");
        }
        out.push_back(static_cast<Vertex>(value));
    }
    return out;
}

VertexSet parse_set(const Graph& g, const std::string& text, std::string_view what) {
    return make_set(g, parse_ids(text, what), what);
}

Mode parse_mode_arg(const std::string& text) {
    if (auto m = parse_mode(text)) return *m;
    throw InputError("unknown mode '" + text + "' (expected pd, zf or dom)");
}

Graph load_graph(const std::string& path, std::istream& in) {
    if (path.empty()) return from_edge_list(in);
    std::ifstream file(path);
    if (!file) throw InputError("cannot open graph file '" + path + "'");
    return from_edge_list(file);
}

SolveOptions base_options() {
    SolveOptions opts;
    opts.guards = Guards::from_env();
    return opts;
}

// ---------------------------------------------------------------------------
// JSON rendering

Json ids(const VertexSet& s) {
    Json a = Json::array();
    for (Vertex v : s) a.push_back(v);
    return a;
}

Json forces(std::span<const Force> fs) {
    Json a = Json::array();
    for (const Force& f : fs) a.push_back(Json::array({f.forcer, f.forced}));
    return a;
}

void put_result(Json& j, const SolveResult& r) {
    j["value"] = r.value;
    j["witness"] = ids(r.witness);
    j["method"] = to_string(r.method);
    j["cuts_added"] = r.cuts_added;
    j["nodes"] = r.nodes;
}

Json report_json(const BoundReport& r) {
    Json j;
    j["name"] = r.name;
    j["lhs"] = to_string(r.lhs);
    j["rhs"] = to_string(r.rhs);
    j["holds"] = r.holds;
    j["tight"] = r.tight;
    Json ctx = Json::object();
    for (const auto& [k, v] : r.context) ctx[k] = v;
    j["context"] = ctx;
    return j;
}

Json envelope(const std::string& command, const Graph* g) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    j["graph_digest"] = g ? Json(digest(*g)) : Json(nullptr);
    return j;
}

const char* parameter_name(Mode m) {
    switch (m) {
        case Mode::PowerDomination: return "gamma_P(G;X)";
        case Mode::ZeroForcing: return "Z(G;X)";
        case Mode::Domination: return "gamma(G;X)";
    }
    return "";
}

class Stopwatch {
public:
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::round(std::chrono::duration<double, std::milli>(d).count() * 1000.0) / 1000.0;
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------------------
// Descriptor helpers (compose)

Json load_descriptor(const std::string& text) {
    if (text.empty()) throw InputError("compose: --descriptor is required");
    std::string body;
    if (trim(text).front() == '{') {
        body = text;
    } else {
        std::ifstream file(text);
        if (!file) throw InputError("cannot open descriptor file '" + text + "'");
        std::stringstream ss;
        ss << file.rdbuf();
        body = ss.str();
    }
    try {
        Json j = Json::parse(body);
        if (!j.is_object()) throw InputError("descriptor: expected a JSON object");
        return j;
    } catch (const Json::exception& e) {
        throw InputError(std::string("descriptor: ") + e.what());
    }
}

std::vector<Vertex> json_ids(const Json& j, std::string_view what) {
    if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of vertex ids");
    std::vector<Vertex> out;
    for (const Json& e : j) {
        if (!e.is_number_unsigned()) throw InputError(std::string(what) + ": expected nonnegative integer ids");
        out.push_back(e.get<Vertex>());
    }
    return out;
}

VertexSet json_set(const Graph& g, const Json& obj, const char* key) {
    if (!obj.contains(key)) throw InputError(std::string("descriptor: missing \"") + key + "\"");
    return make_set(g, json_ids(obj.at(key), key), key);
}

Vertex json_vertex(const Json& obj, const char* key, std::optional<Vertex> fallback = std::nullopt) {
    if (!obj.contains(key)) {
        if (fallback) return *fallback;
        throw InputError(std::string("descriptor: missing \"") + key + "\"");
    }
    const Json& e = obj.at(key);
    if (!e.is_number_unsigned()) throw InputError(std::string("descriptor: \"") + key + "\" must be a vertex id");
    return e.get<Vertex>();
}

/// A graph given as edge-list text, {"n", "edges"}, or {"family", "params"}.
Graph json_graph(const Json& j) {
    if (j.is_string()) return from_edge_list(j.get<std::string>());
    if (!j.is_object()) throw InputError("descriptor: graph must be edge-list text or an object");
    if (j.contains("family")) {
        std::vector<long long> params;
        if (j.contains("params")) {
            if (!j.at("params").is_array()) throw InputError("descriptor: \"params\" must be an array");
            for (const Json& p : j.at("params")) {
                if (!p.is_number_integer()) throw InputError("descriptor: family parameters must be integers");
                params.push_back(p.get<long long>());
            }
        }
        return gen_family(j.at("family").get<std::string>(), params).graph;
    }
    if (!j.contains("n") || !j.at("n").is_number_unsigned())
        throw InputError("descriptor: graph object needs \"n\"");
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        for (const Json& e : j.at("edges")) {
            auto pair = json_ids(e, "edges");
            if (pair.size() != 2) throw InputError("descriptor: each edge needs two endpoints");
            edges.emplace_back(pair[0], pair[1]);
        }
    }
    return Graph::from_edges(j.at("n").get<std::size_t>(), edges);
}

// ---------------------------------------------------------------------------
// Commands

Json cmd_solve(const Args& a, std::istream& in) {
    Graph g = load_graph(a.graph, in);
    const Mode mode = parse_mode_arg(a.mode);
    VertexSet x = parse_set(g, a.x, "X");
    SolveOptions opts = base_options();
    if (!a.separator.empty()) {
        if (a.separator == "failed") opts.separator = Separator::FailedSet;
        else if (a.separator == "maximal") opts.separator = Separator::MaximalFailedSet;
        else if (a.separator == "minimum") opts.separator = Separator::MinimumFort;
        else throw InputError("unknown separator '" + a.separator + "' (expected failed, maximal or minimum)");
    }
    if (a.min_forts) {
        if (!a.separator.empty() && opts.separator != Separator::MinimumFort)
            throw InputError("--min-forts conflicts with --separator " + a.separator);
        opts.separator = Separator::MinimumFort;
    }

    Stopwatch clock;
    SolveResult r;
    if (a.method == "cg") {
        r = solve(g, x, mode, opts);
    } else if (a.method == "oracle") {
        r = brute_force_min(g, x, mode, opts.guards);
    } else if (a.method == "reduction") {
        if (mode != Mode::PowerDomination)
            throw InputError("method reduction is defined for --mode pd only");
        r = reduction_pd_number(g, x, opts);
    } else {
        throw InputError("unknown method '" + a.method + "' (expected cg, oracle or reduction)");
    }

    Json j = envelope("solve", &g);
    j["parameter"] = parameter_name(mode);
    j["mode"] = to_string(mode);
    j["x"] = ids(x);
    put_result(j, r);
    j["runtime_ms"] = clock.ms();
    return j;
}

Json cmd_check(const Args& a, std::istream& in, bool& valid) {
    Graph g = load_graph(a.graph, in);
    const Mode mode = parse_mode_arg(a.mode);
    VertexSet s = parse_set(g, a.set, "set");
    VertexSet x = parse_set(g, a.x, "X");
    VertexSet reached = mode == Mode::PowerDomination ? power_observed(g, s)
                        : mode == Mode::ZeroForcing   ? closure(g, s)
                                                      : closed_neighborhood(g, s);
    const bool contains_x = x.is_subset_of(s);
    valid = reached.is_full() && contains_x;

    Json j = envelope("check", &g);
    j["mode"] = to_string(mode);
    j["set"] = ids(s);
    j["x"] = ids(x);
    j["feasible"] = reached.is_full();
    j["contains_x"] = contains_x;
    j["valid"] = valid;
    j["reached"] = ids(reached);
    return j;
}

Json cmd_trace(const Args& a, std::istream& in) {
    Graph g = load_graph(a.graph, in);
    const Mode mode = parse_mode_arg(a.mode);
    if (mode == Mode::Domination) throw InputError("trace: --mode must be pd or zf");
    VertexSet s = parse_set(g, a.set, "set");
    PropagationTrace tr = mode == Mode::PowerDomination ? pd_observe(g, s) : zf_closure(g, s);
    ForcingChainDecomposition chains = forcing_chains(g, tr);

    Json j = envelope("trace", &g);
    j["mode"] = to_string(mode);
    j["seed"] = ids(tr.seed);
    j["initial"] = ids(tr.initial);
    j["domination"] = forces(tr.domination);
    Json rounds = Json::array();
    for (const auto& r : tr.rounds) rounds.push_back(forces(r));
    j["rounds"] = rounds;
    j["final"] = ids(tr.final_set);
    j["complete"] = tr.final_set.is_full();
    j["chains"] = chains.chains;
    j["terminals"] = ids(chains.terminals);
    return j;
}

Json cmd_forts(const Args& a, std::istream& in) {
    Graph g = load_graph(a.graph, in);
    Json j = envelope("forts", &g);
    if (a.violated_by) {
        const Mode mode = parse_mode_arg(a.mode);
        if (mode == Mode::Domination) throw InputError("forts: --mode must be pd or zf");
        VertexSet s = parse_set(g, *a.violated_by, "violated-by");
        VertexSet reached = mode == Mode::PowerDomination ? power_observed(g, s) : closure(g, s);
        std::size_t nodes = 0;
        Fort minimum = minimum_violated_fort(g, reached, &nodes);
        Fort failed = fort_from_failed_set(g, s, mode);
        j["mode"] = to_string(mode);
        j["violated_by"] = ids(s);
        j["reached"] = ids(reached);
        j["minimum_fort"] = ids(minimum.members());
        j["failed_set_fort"] = ids(failed.members());
        j["nodes"] = nodes;
        return j;
    }
    std::vector<Fort> all = enumerate_forts(g, a.max_n);
    Json list = Json::array();
    for (const Fort& f : all) list.push_back(ids(f.members()));
    j["count"] = all.size();
    j["forts"] = list;
    return j;
}

void cmd_gen(const Args& a, std::ostream& out) {
    Generated gen = gen_family(a.family, a.params);
    out << "# family " << a.family;
    for (long long p : a.params) out << ' ' << p;
    out << '\n';
    for (std::size_t v = 0; v < gen.labels.size(); ++v) out << "# label " << v << ' ' << gen.labels[v] << '\n';
    out << to_edge_list(gen.graph);
}

Json cmd_tree_pd(const Args& a, std::istream& in) {
    Graph g = load_graph(a.graph, in);
    if (!is_tree(g)) throw InputError("tree-pd: input graph is not a tree");
    if (a.jobs == 0) throw InputError("tree-pd: --jobs must be positive");
    SolveOptions opts = base_options();
    std::optional<Vertex> at;
    if (a.split != "auto") {
        auto v = parse_ids(a.split, "split");
        if (v.size() != 1) throw InputError("tree-pd: --split takes one vertex or 'auto'");
        make_set(g, v, "split");
        at = v[0];
    }

    Stopwatch clock;
    Json j = envelope("tree-pd", &g);
    const Vertex pivot = at ? *at : (g.order() > 2 ? centroid(g) : 0);
    if (g.order() <= 2 || g.degree(pivot) < 2) {
        SolveResult r = tree_pd_parallel(g, at, a.jobs, opts);
        put_result(j, r);
        j["split"] = nullptr;
    } else {
        TreeSplit sp = tree_split(g, pivot, a.jobs, opts);
        SolveResult r = evaluate_split(g, sp);
        put_result(j, r);
        Json split;
        split["vertex"] = sp.v;
        split["g"] = sp.g;
        Json subs = Json::array();
        for (std::size_t i = 0; i < sp.subtrees.size(); ++i) {
            const SplitSubtree& st = sp.subtrees[i];
            Json s;
            s["vertices"] = st.piece.to_parent;
            s["class"] = to_string(sp.classes[i]);
            s["with_root"] = st.with_root.value;
            s["plain"] = st.plain.value;
            s["without_root"] = st.without_root.value;
            subs.push_back(s);
        }
        split["subtrees"] = subs;
        j["split"] = split;
    }
    j["runtime_ms"] = clock.ms();
    return j;
}

Json cmd_compose(const Args& a, std::istream& in) {
    Graph g = load_graph(a.graph, in);
    Json d = load_descriptor(a.descriptor);
    SolveOptions opts = base_options();
    Stopwatch clock;
    Json j = envelope("compose", &g);
    j["kind"] = a.kind;

    if (a.kind == "pendant") {
        VertexSet x = json_set(g, d, "x");
        std::vector<Pendant> pendants;
        if (d.contains("pendants")) {
            if (!d.at("pendants").is_array()) throw InputError("descriptor: \"pendants\" must be an array");
            for (const Json& p : d.at("pendants")) {
                if (!p.contains("graph")) throw InputError("descriptor: pendant needs \"graph\"");
                pendants.push_back({json_graph(p.at("graph")), json_vertex(p, "root", Vertex{0}), json_vertex(p, "at")});
            }
        }
        std::optional<std::vector<Force>> fs;
        if (d.contains("forces")) {
            fs.emplace();
            for (const Json& f : d.at("forces")) {
                auto pair = json_ids(f, "forces");
                if (pair.size() != 2) throw InputError("descriptor: each force is [forcer, forced]");
                fs->push_back({pair[0], pair[1]});
            }
        }
        std::size_t cap = a.cap;
        if (d.contains("cap")) cap = json_vertex(d, "cap");
        PendantComposition c = compose_pendant_zf(g, x, pendants, fs, opts, cap);
        j["x"] = ids(x);
        j["composed_order"] = c.composed.order();
        j["composed_digest"] = digest(c.composed);
        j["value"] = c.result.value;
        j["witness"] = ids(c.result.witness);
        Json pv = Json::array();
        for (const SolveResult& r : c.pendant_values) pv.push_back({{"value", r.value}, {"witness", ids(r.witness)}});
        j["pendant_values"] = pv;
        j["embed"] = c.embed;
        if (d.value("verify", false)) {
            VertexSet lifted(c.composed.order());
            for (Vertex v : x) lifted.insert(v);
            j["direct_value"] = restricted_zf_number(c.composed, lifted, opts).value;
        }
    } else if (a.kind == "boundary") {
        VertexSet v1 = json_set(g, d, "v1");
        VertexSet v2 = d.contains("v2") ? json_set(g, d, "v2") : v1.complement();
        BoundaryComposition c = compose_boundary_pd(g, v1, v2, json_set(g, d, "w1"), json_set(g, d, "w2"), opts);
        j["bound"] = c.bound;
        j["witness"] = ids(c.witness);
        j["part1"] = {{"value", c.part1.value}, {"witness", ids(c.part1.witness)}};
        j["part2"] = {{"value", c.part2.value}, {"witness", ids(c.part2.witness)}};
    } else if (a.kind == "apex") {
        VertexSet x = json_set(g, d, "x");
        VertexSet t = json_set(g, d, "t");
        ApexReport r = check_apex_terminal(g, x, t, opts, a.cap);
        j["x"] = ids(x);
        j["t"] = ids(t);
        j["apex_digest"] = digest(r.apex);
        j["terminal_set"] = r.terminal_set;
        j["x_forces_apex"] = r.x_forces_apex;
        j["some_terminal_in_t"] = r.some_terminal_in_t;
        j["z_g"] = r.z_g;
        j["z_apex"] = r.z_apex;
    } else {
        throw InputError("compose: unknown kind '" + a.kind + "' (expected pendant, boundary or apex)");
    }
    j["runtime_ms"] = clock.ms();
    return j;
}

Json cmd_bounds(const Args& a, std::istream& in, bool& all_hold) {
    if (!a.audit) throw InputError("bounds: pass --audit to run the bound audit");
    if (a.jobs == 0) throw InputError("bounds: --jobs must be positive");
    Graph g = load_graph(a.graph, in);
    AuditInput input{g, parse_set(g, a.x, "X"), std::nullopt, std::nullopt};
    if (a.part) input.part = parse_set(g, *a.part, "part");
    if (a.s) input.s = parse_set(g, *a.s, "S");

    Stopwatch clock;
    AuditResult res = audit(input, a.jobs, base_options());
    all_hold = res.all_hold();
    Json j = envelope("bounds", &g);
    j["x"] = ids(input.x);
    Json reports = Json::array();
    for (const BoundReport& r : res.reports) reports.push_back(report_json(r));
    j["reports"] = reports;
    Json skipped = Json::array();
    for (const AuditSkip& s : res.skipped) skipped.push_back({{"name", s.name}, {"reason", s.reason}});
    j["skipped"] = skipped;
    j["all_hold"] = all_hold;
    j["runtime_ms"] = clock.ms();
    return j;
}

Json cmd_terminals(const Args& a, std::istream& in) {
    Graph g = load_graph(a.graph, in);
    VertexSet b = parse_set(g, a.set, "set");
    std::vector<VertexSet> sets = enumerate_terminal_sets(g, b, a.cap);
    Json j = envelope("terminals", &g);
    j["set"] = ids(b);
    j["count"] = sets.size();
    Json list = Json::array();
    for (const VertexSet& s : sets) list.push_back(ids(s));
    j["terminal_sets"] = list;
    return j;
}

Json cmd_spread(const Args& a, std::istream& in) {
    Graph g = load_graph(a.graph, in);
    if (a.v < 0) throw InputError("spread: --v is required");
    const Vertex v = static_cast<Vertex>(a.v);
    SolveOptions opts = base_options();
    const int z = spread(g, v, opts);
    SolveResult r = z_restricted_single(g, v, opts);
    Json j = envelope("spread", &g);
    j["v"] = v;
    j["spread"] = z;
    j["z_restricted"] = {{"value", r.value}, {"witness", ids(r.witness)}};
    return j;
}

void add_graph_option(CLI::App* sub, Args& a) {
    sub->add_option("--graph", a.graph, "Edge-list file (default: standard input)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Args a;
    CLI::App app{"Exact power domination and zero forcing computations", "pdzf"};
    app.require_subcommand(1);

    auto* solve_cmd = app.add_subcommand("solve", "Restricted parameter of G subject to X");
    add_graph_option(solve_cmd, a);
    solve_cmd->add_option("--mode", a.mode, "pd, zf or dom");
    solve_cmd->add_option("--x", a.x, "Comma-separated forced vertices");
    solve_cmd->add_option("--method", a.method, "cg, oracle or reduction");
    solve_cmd->add_flag("--min-forts", a.min_forts, "Separate with minimum violated forts");
    solve_cmd->add_option("--separator", a.separator, "failed, maximal or minimum");

    auto* trace_cmd = app.add_subcommand("trace", "Propagation trace from a set");
    add_graph_option(trace_cmd, a);
    trace_cmd->add_option("--mode", a.mode, "pd or zf");
    trace_cmd->add_option("--set", a.set, "Starting set")->required();

    auto* forts_cmd = app.add_subcommand("forts", "All forts, or the minimum fort violated by a set");
    add_graph_option(forts_cmd, a);
    forts_cmd->add_option("--max-n", a.max_n, "Order guard for enumeration");
    forts_cmd->add_option("--violated-by", a.violated_by, "Set whose closure the fort must avoid");
    forts_cmd->add_option("--mode", a.mode, "pd or zf (with --violated-by)");

    auto* gen_cmd = app.add_subcommand("gen", "Write a named graph family as an edge list");
    gen_cmd->add_option("family", a.family, "Family name")->required();
    gen_cmd->add_option("params", a.params, "Integer parameters");

    auto* tree_cmd = app.add_subcommand("tree-pd", "Power domination number of a tree by splitting");
    add_graph_option(tree_cmd, a);
    tree_cmd->add_option("--split", a.split, "Split vertex or 'auto' (centroid)");
    tree_cmd->add_option("--jobs", a.jobs, "Worker threads");

    auto* compose_cmd = app.add_subcommand("compose", "Composition statements on a base graph");
    add_graph_option(compose_cmd, a);
    compose_cmd->add_option("kind", a.kind, "pendant, boundary or apex")->required();
    compose_cmd->add_option("--descriptor", a.descriptor, "JSON object, inline or as a file path")->required();
    compose_cmd->add_option("--cap", a.cap, "Terminal enumeration cap");

    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the bound catalogue");
    add_graph_option(bounds_cmd, a);
    bounds_cmd->add_flag("--audit", a.audit, "Run every applicable bound");
    bounds_cmd->add_option("--x", a.x, "Restriction set X");
    bounds_cmd->add_option("--part", a.part, "Inner vertex set V / block V1");
    bounds_cmd->add_option("--s", a.s, "Power dominating set of the inner graph");
    bounds_cmd->add_option("--jobs", a.jobs, "Worker threads");

    auto* term_cmd = app.add_subcommand("terminals", "Terminal sets over all chronological lists");
    add_graph_option(term_cmd, a);
    term_cmd->add_option("--set", a.set, "Zero forcing set")->required();
    term_cmd->add_option("--cap", a.cap, "Maximum number of distinct sets");

    auto* spread_cmd = app.add_subcommand("spread", "Zero forcing spread of a vertex");
    add_graph_option(spread_cmd, a);
    spread_cmd->add_option("--v", a.v, "Vertex")->required();

    auto* check_cmd = app.add_subcommand("check", "Verify a candidate set");
    add_graph_option(check_cmd, a);
    check_cmd->add_option("--mode", a.mode, "pd, zf or dom");
    check_cmd->add_option("--set", a.set, "Candidate set")->required();
    check_cmd->add_option("--x", a.x, "Vertices the set must contain");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "pdzf: error: " << e.what() << '\n';
        return 2;
    }

    try {
        int status = 0;
        Json j;
        if (*gen_cmd) {
            cmd_gen(a, out);
            return 0;
        } else if (*solve_cmd) {
            j = cmd_solve(a, in);
        } else if (*trace_cmd) {
            j = cmd_trace(a, in);
        } else if (*forts_cmd) {
            j = cmd_forts(a, in);
        } else if (*tree_cmd) {
            j = cmd_tree_pd(a, in);
        } else if (*compose_cmd) {
            j = cmd_compose(a, in);
        } else if (*bounds_cmd) {
            bool all_hold = true;
            j = cmd_bounds(a, in, all_hold);
            if (!all_hold) {
                err << "pdzf: defect: a bound reported holds=false\n";
                status = 1;
            }
        } else if (*term_cmd) {
            j = cmd_terminals(a, in);
        } else if (*spread_cmd) {
            j = cmd_spread(a, in);
        } else if (*check_cmd) {
            bool valid = false;
            j = cmd_check(a, in, valid);
            if (!valid) status = 1;
        }
        out << j.dump(2) << '\n';
        return status;
    } catch (const GuardExceeded& e) {
        err << "pdzf: guard exceeded: " << e.what() << '\n';
        return 3;
    } catch (const InputError& e) {
        err << "pdzf: error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "pdzf: internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace pdzf::cli
