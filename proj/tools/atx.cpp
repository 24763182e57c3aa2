// atx: command-line front end for the orientation, coloring and construction library.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "atx/at_search.hpp"
#include "atx/construct.hpp"
#include "atx/diff.hpp"
#include "atx/graph_io.hpp"
#include "atx/harness.hpp"
#include "atx/serialize.hpp"
#include "atx/structure.hpp"

using namespace atx;

namespace {

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kGuard = 3, kInternal = 4 };

struct Common {
    std::string format = "auto";
    bool compact = false;
};

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "-" reads stdin, "@path" reads a file, anything else is the text itself.
std::string resolve_text(const std::string& arg) {
    if (arg == "-") return read_all(std::cin);
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream f(arg.substr(1));
        if (!f) throw Error(ErrorCode::InvalidInput, "cannot open " + arg.substr(1));
        return read_all(f);
    }
    return arg;
}

Graph load_graph(const std::string& arg, const Common& c) {
    std::string text = resolve_text(arg);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return parse_graph(text, parse_format(c.format));
}

struct AnchorSpec {
    VertexId v;
    int cap;  // 0 when not given
};

std::vector<AnchorSpec> parse_anchors(const std::vector<std::string>& raw) {
    std::vector<AnchorSpec> out;
    for (const auto& chunk : raw) {
        std::stringstream ss(chunk);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            AnchorSpec a{0, 0};
            const auto colon = item.find(':');
            try {
                std::size_t used = 0;
                a.v = std::stoi(item.substr(0, colon), &used);
                if (used != (colon == std::string::npos ? item.size() : colon)) throw std::invalid_argument(item);
                if (colon != std::string::npos) {
                    a.cap = std::stoi(item.substr(colon + 1), &used);
                    if (used != item.size() - colon - 1) throw std::invalid_argument(item);
                }
            } catch (const std::logic_error&) {
                throw Error(ErrorCode::InvalidParameter, "bad anchor '" + item + "', expected v or v:cap");
            }
            out.push_back(a);
        }
    }
    return out;
}

void emit(const Json& j, const Common& c) { std::cout << (c.compact ? j.dump() : j.dump(2)) << '\n'; }

int exit_for(const Error& e) {
    switch (e.code()) {
    case ErrorCode::TooLarge: return kGuard;
    case ErrorCode::ContractViolation: return kInternal;
    default: return kUsage;
    }
}

int cmd_diff(const std::string& graph, const std::string& arcs, const Common& c) {
    Graph g = load_graph(graph, c);
    auto parsed = parse_arcs(resolve_text(arcs));
    Orientation d = Orientation::of_graph(g, parsed);
    DiffResult r = compute_diff(d);
    // Cross-check with the polynomial coefficient on small inputs.
    if (g.m() <= 20 && coefficient_oracle(d) != std::abs(r.diff())) fail(ErrorCode::ContractViolation, "diff disagrees with coefficient");
    emit(to_json(r), c);
    return kOk;
}

int cmd_check(const std::string& graph, const std::vector<std::string>& raw, const std::string& mode, const Common& c) {
    Graph g = load_graph(graph, c);
    std::vector<std::pair<VertexId, int>> anchors;
    for (auto a : parse_anchors(raw)) anchors.push_back({a.v, a.cap ? a.cap : 2});
    const CapacityMap f = extendability_capacity(g.n(), anchors);
    Json j;
    if (mode == "at") {
        auto cert = is_f_AT(g, f);
        j["at"] = cert.has_value();
        if (cert) {
            std::string why;
            if (!independent_certificate_check(g, *cert, &why)) fail(ErrorCode::ContractViolation, "certificate rejected: " + why);
            j["certificate"] = to_json(*cert);
            j["verified"] = true;
        }
        emit(j, c);
        return cert ? kOk : kFalse;
    }
    if (mode != "choosable") fail(ErrorCode::InvalidParameter, "mode must be at or choosable");
    auto res = is_f_choosable(g, f);
    j["choosable"] = res.choosable;
    if (!res.choosable) {
        if (brute_force_L_colorable(g, *res.witness)) fail(ErrorCode::ContractViolation, "witness lists are colorable");
        j["witnessLists"] = to_json(*res.witness);
        j["verified"] = true;
    }
    emit(j, c);
    return res.choosable ? kOk : kFalse;
}

int cmd_structure(const std::string& graph, const Common& c) {
    emit(structure_report(load_graph(graph, c)), c);
    return kOk;
}

Json construction_json(const Graph& g, const Construction& con) {
    std::string why;
    if (!independent_certificate_check(g, con.certificate, &why)) fail(ErrorCode::ContractViolation, "certificate rejected: " + why);
    if (!verify_trace(con.trace, con.certificate, &why)) fail(ErrorCode::ContractViolation, "trace rejected: " + why);
    Json j;
    j["certificate"] = to_json(con.certificate);
    j["trace"] = to_json(con.trace);
    j["verified"] = true;
    if (con.trace.flagged()) j["flagged"] = true;
    return j;
}

int cmd_construct(const std::string& graph, const std::string& target, const std::vector<std::string>& raw,
                  const Common& c) {
    Graph g = load_graph(graph, c);
    auto anchors = parse_anchors(raw);
    std::vector<int> caps;
    if (target == "22") caps = {2, 2};
    else if (target == "21") caps = {2, 1};
    else if (target == "222" || target == "mad-222") caps = {2, 2, 2};
    else if (target == "221") caps = {2, 2, 1};
    else fail(ErrorCode::InvalidParameter, "unknown target '" + target + "'");
    if (anchors.size() != caps.size())
        fail(ErrorCode::InvalidParameter, target + " takes " + std::to_string(caps.size()) + " anchors");
    for (std::size_t i = 0; i < caps.size(); ++i)
        if (anchors[i].cap && anchors[i].cap != caps[i])
            fail(ErrorCode::InvalidParameter, "anchor " + std::to_string(i) + " must have cap " + std::to_string(caps[i]));

    std::vector<VertexId> v;
    for (auto a : anchors) v.push_back(a.v);
    ConstructOutcome out;
    if (target == "22") out.construction = construct_22_orientation(g, v[0], v[1]);
    else if (target == "21") out = construct_21_orientation(g, v[0], v[1]);
    else if (target == "222") out = construct_222_orientation(g, v[0], v[1], v[2]);
    else if (target == "221") out.construction = construct_221_trianglefree(g, v[0], v[1], v[2]);
    else out = construct_mad_222(g, v[0], v[1], v[2]).outcome;

    if (out.ok()) {
        emit(construction_json(g, *out.construction), c);
        return kOk;
    }
    Json lists = Json::array();
    bool refuted = false;
    for (const auto& l : out.witness_lists) {
        refuted = refuted || !brute_force_L_colorable(g, l);
        lists.push_back(to_json(l));
    }
    if (!refuted) fail(ErrorCode::ContractViolation, "no witness list refutes extendability");
    Json j;
    j["result"] = "impossible";
    j["reason"] = std::string(to_string(*out.reason));
    j["witnessLists"] = std::move(lists);
    emit(j, c);
    return kFalse;
}

int cmd_sweep(SweepConfig cfg, bool from_stdin) {
    std::vector<Graph> graphs;
    if (from_stdin) {
        for (auto& g : read_graph6_stream(std::cin))
            if (g.n() >= cfg.min_vertices && g.n() <= cfg.max_vertices && in_class(g, cfg.cls)) graphs.push_back(std::move(g));
    } else {
        graphs = generate_corpus(cfg);
    }
    SweepSummary s = run_sweep(graphs, cfg, &std::cout);
    std::cerr << "sweep " << to_string(cfg.cls) << " n<=" << cfg.max_vertices << " arity " << cfg.arity << ": "
              << s.graphs << " graphs, " << s.tuples << " tuples, " << s.certificates << " certificates, "
              << s.witnesses << " witnesses, " << s.flagged << " flagged, " << s.counterexamples
              << " counterexamples\n";
    if (s.contract_violations) return kInternal;
    return s.counterexamples ? kFalse : kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alon-Tarsi orientations, list extendability and certified constructions"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "graph format: auto, graph6 or edgelist")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    app.add_flag("--json", common.compact, "compact single-line JSON");

    std::string graph, arcs, mode = "at", target;
    std::vector<std::string> anchors;
    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("graph", graph, "graph text, @file, or - for stdin")->required();
        sub->add_option("--format", common.format)->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
        sub->add_flag("--json", common.compact);
    };

    auto* diff = app.add_subcommand("diff", "even/odd Eulerian sub-digraph counts of an orientation");
    add_graph(diff);
    diff->add_option("arcs", arcs, "arcs as 't h' pairs or a JSON array, @file, or -")->required();

    auto* check = app.add_subcommand("check", "f-AT or f-choosability with anchor caps, 3 elsewhere");
    add_graph(check);
    check->add_option("--anchors", anchors, "v:cap,...");
    check->add_option("--mode", mode)->check(CLI::IsMember({"at", "choosable"}));

    auto* structure = app.add_subcommand("structure", "structural report");
    add_graph(structure);

    auto* construct = app.add_subcommand("construct", "certified extendability orientation");
    add_graph(construct);
    construct->add_option("--target", target, "anchor caps: 22, 21, 222, 221 (triangle-free) or mad-222")
        ->required()
        ->check(CLI::IsMember({"22", "21", "222", "221", "mad-222"}));
    construct->add_option("--anchors", anchors, "v[:cap],...")->required();

    SweepConfig cfg;
    std::string cls = "k4mf";
    bool from_stdin = false;
    auto* sweep = app.add_subcommand("sweep", "corpus verification, one JSON line per graph");
    sweep->add_option("--class", cls)->check(CLI::IsMember({"k4mf", "k4mf-trianglefree", "mad145", "all"}));
    sweep->add_option("--max-vertices", cfg.max_vertices)->check(CLI::Range(1, 10));
    sweep->add_option("--min-vertices", cfg.min_vertices)->check(CLI::Range(1, 10));
    sweep->add_option("--arity", cfg.arity)->check(CLI::IsMember({2, 3}));
    sweep->add_option("--workers", cfg.workers)->check(CLI::Range(1, 256));
    sweep->add_option("--seed", cfg.seed);
    sweep->add_option("--sample", cfg.sample, "anchor tuples per graph, 0 for all");
    sweep->add_flag("--stdin", from_stdin, "read graph6 lines from standard input");
    sweep->add_flag("--structure,!--no-structure", cfg.structure, "run or skip the structural property checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    int rc = kOk;
    try {
        if (*diff) rc = cmd_diff(graph, arcs, common);
        else if (*check) rc = cmd_check(graph, anchors, mode, common);
        else if (*structure) rc = cmd_structure(graph, common);
        else if (*construct) rc = cmd_construct(graph, target, anchors, common);
        else {
            cfg.cls = parse_class_filter(cls);
            rc = cmd_sweep(cfg, from_stdin);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        rc = exit_for(e);
    }
    std::cerr << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
    return rc;
}
