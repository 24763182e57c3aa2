// Acceptance driver: one PASS/FAIL line per criterion, details in a report file.
// Exit status is 0 once every criterion has a verdict; --strict turns any FAIL into 1.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "atx/at_search.hpp"
#include "atx/coloring.hpp"
#include "atx/diff.hpp"
#include "atx/enumerate.hpp"
#include "atx/graph_io.hpp"
#include "atx/harness.hpp"
#include "atx/mad.hpp"
#include "atx/serialize.hpp"
#include "atx/structure.hpp"
#include "oracles.hpp"

using namespace atx;

namespace {

struct Verdict {
    std::string id;
    bool pass = false;
    std::string summary;
    std::vector<std::string> details;
};

class Clock {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.precision(3);
    o << s << " s";
    return o.str();
}

Verdict a1() {
    Clock clk;
    long orientations = 0, bad = 0;
    Verdict v{"A1"};
    for (const auto& g : enumerate_graphs({5, 1, true, nullptr})) {
        const auto& edges = g.edges();
        for (std::uint32_t mask = 0; mask < (1u << g.m()); ++mask) {
            std::vector<Arc> arcs;
            for (int i = 0; i < g.m(); ++i)
                arcs.push_back(mask >> i & 1 ? Arc{edges[i].v, edges[i].u} : Arc{edges[i].u, edges[i].v});
            Orientation d = Orientation::of_graph(g, arcs);
            const auto r = compute_diff(d);
            ++orientations;
            if (std::abs(r.diff()) != coefficient_oracle(d)) {
                ++bad;
                if (v.details.size() < 20) v.details.push_back("mismatch on " + emit_graph6(g) + " mask " + std::to_string(mask));
            }
        }
    }
    v.pass = bad == 0 && orientations > 0;
    v.summary = std::to_string(orientations) + " orientations, " + std::to_string(bad) + " mismatches (" +
                fmt_seconds(clk.seconds()) + ")";
    return v;
}

Verdict a2() {
    Clock clk;
    Verdict v{"A2"};
    long maps = 0, at = 0, bad = 0;
    for (const auto& g : enumerate_graphs({5, 1, false, nullptr})) {
        const int n = g.n();
        std::vector<int> f(n, 1);
        for (;;) {
            CapacityMap caps(f);
            ++maps;
            if (is_f_AT(g, caps)) {
                ++at;
                if (!is_f_choosable(g, caps).choosable) {
                    ++bad;
                    v.details.push_back("AT but not choosable: " + emit_graph6(g));
                }
            }
            int i = 0;
            while (i < n && ++f[i] == 4) f[i++] = 1;
            if (i == n) break;
        }
    }
    v.pass = bad == 0;
    v.summary = std::to_string(maps) + " capacity maps, " + std::to_string(at) + " AT, " + std::to_string(bad) +
                " not choosable (" + fmt_seconds(clk.seconds()) + ")";
    return v;
}

Verdict sweep_verdict(const std::string& id, SweepConfig cfg) {
    Clock clk;
    Verdict v{id};
    cfg.structure = false;  // structural claims are A9
    auto corpus = generate_corpus(cfg);
    std::ostringstream lines;
    auto s = run_sweep(corpus, cfg, &lines);
    std::istringstream in(lines.str());
    for (std::string line; std::getline(in, line);) {
        auto j = Json::parse(line);
        for (const auto& c : j["counterexamples"])
            if (v.details.size() < 40) v.details.push_back(j["graph"].get<std::string>() + ": " + c.get<std::string>());
    }
    v.pass = s.counterexamples == 0 && s.contract_violations == 0 && s.graphs > 0;
    if (cfg.cls == ClassFilter::Mad145) v.pass = v.pass && s.largest_kernel <= 8;
    std::ostringstream o;
    o << to_string(cfg.cls) << " n<=" << cfg.max_vertices << " arity " << cfg.arity << ": " << s.graphs << " graphs, "
      << s.tuples << " tuples, " << s.certificates << " certificates, " << s.witnesses << " witnesses, " << s.flagged
      << " flagged, " << s.counterexamples << " counterexamples, " << s.contract_violations << " contract violations";
    if (cfg.cls == ClassFilter::Mad145) o << ", largest kernel " << s.largest_kernel;
    o << " (" << fmt_seconds(clk.seconds()) << ")";
    v.summary = o.str();
    return v;
}

Verdict a7() {
    Clock clk;
    Verdict v{"A7"};
    auto t = search_tightness_witness(10);
    std::ostringstream o;
    o << t.graphs_examined << " graphs with mad 14/5, " << t.triples_examined << " triples, " << t.skipped_too_large
      << " skipped as too large";
    if (!t.witness) {
        // no witness at this scale is inconclusive, not a failure
        v.pass = true;
        o << "; INCONCLUSIVE: no witness up to " << t.reached_vertices << " vertices";
    } else {
        const auto& w = *t.witness;
        // re-check everything here, independently of the search
        const bool mad_ok = max_average_degree(w.graph) == ExactRational(14, 5);
        const bool colorless = !oracle::L_colorable(w.graph, w.lists.lists);
        ColoringProfile prof(w.graph);
        const bool nonblocked = !is_blocked_triple(prof, w.triple[0], w.triple[1], w.triple[2]);
        bool sizes = true;
        for (VertexId x = 0; x < w.graph.n(); ++x) {
            const bool anchor = std::find(w.triple.begin(), w.triple.end(), x) != w.triple.end();
            sizes = sizes && w.lists.lists[x].size() == (anchor ? 2u : 3u);
        }
        v.pass = w.verified && mad_ok && colorless && nonblocked && sizes;
        o << "; witness graph " << emit_graph6(w.graph) << " triple (" << w.triple[0] << "," << w.triple[1] << ","
          << w.triple[2] << ") lists " << to_json(w.lists)["lists"].dump();
        v.details.push_back("edges: " + emit_edgelist(w.graph));
        v.details.push_back(std::string("mad 14/5: ") + (mad_ok ? "yes" : "no") +
                            ", no L-coloring (brute force): " + (colorless ? "yes" : "no") +
                            ", non-blocked: " + (nonblocked ? "yes" : "no") + ", list sizes 2/3: " + (sizes ? "yes" : "no"));
    }
    o << " (" << fmt_seconds(clk.seconds()) << ")";
    v.summary = o.str();
    return v;
}

// Random oriented graph on the given vertex ids with up to max_edges edges.
std::vector<Arc> random_digraph(std::mt19937_64& rng, const std::vector<VertexId>& ids, int max_edges) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) pairs.push_back({ids[i], ids[j]});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    const int m = static_cast<int>(std::min<std::size_t>(pairs.size(), rng() % (max_edges + 1)));
    std::vector<Arc> arcs;
    for (int i = 0; i < m; ++i) {
        auto [a, b] = pairs[i];
        arcs.push_back(rng() & 1 ? Arc{a, b} : Arc{b, a});
    }
    return arcs;
}

Verdict a8() {
    Clock clk;
    Verdict v{"A8"};
    std::mt19937_64 rng(20261014);
    long amalgams = 0, patterns = 0, bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        // two blocks sharing vertex 0, at most 6 edges each
        const int n1 = 2 + static_cast<int>(rng() % 4), n2 = 2 + static_cast<int>(rng() % 4);
        const int n = n1 + n2 - 1;
        std::vector<VertexId> left(n1), right{0};
        std::iota(left.begin(), left.end(), 0);
        for (int i = n1; i < n; ++i) right.push_back(i);
        Orientation d1(n, random_digraph(rng, left, 6)), d2(n, random_digraph(rng, right, 6));
        Orientation glued = glue_at_cutvertex(d1, d2, 0);
        auto [e, o] = oracle::eulerian_counts(n, glued.arcs());
        const auto g1 = compute_diff(d1).diff(), g2 = compute_diff(d2).diff();
        ++amalgams;
        if (compute_diff(glued).diff() != g1 * g2 || e - o != g1 * g2) {
            ++bad;
            v.details.push_back("product law fails, trial " + std::to_string(trial));
        }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        // u1 = 0, u2 = 1, u3 = 2, u4 = 3 and a random rest on {2, ..., n-1} with <= 8 edges
        const int n = 4 + static_cast<int>(rng() % 5);
        std::vector<VertexId> rest_ids(n - 2);
        std::iota(rest_ids.begin(), rest_ids.end(), 2);
        auto arcs = random_digraph(rng, rest_ids, 8);
        for (Arc a : std::vector<Arc>{{0, 2}, {1, 0}, {1, 2}, {3, 1}}) arcs.push_back(a);
        std::shuffle(arcs.begin(), arcs.end(), rng);
        Orientation d(n, arcs);
        std::vector<Arc> reduced;
        for (auto a : arcs)
            if (a.tail > 1 && a.head > 1) reduced.push_back(a);
        auto [e, o] = oracle::eulerian_counts(n, arcs);
        auto [re, ro] = oracle::eulerian_counts(n, reduced);
        ++patterns;
        if (!triangle_reduce_check(d, 0, 1, 2, 3) || e - o != re - ro) {
            ++bad;
            v.details.push_back("diff not preserved, trial " + std::to_string(trial));
        }
    }
    v.pass = bad == 0;
    v.summary = std::to_string(amalgams) + " cut-vertex amalgams, " + std::to_string(patterns) +
                " triangle patterns, " + std::to_string(bad) + " failures (" + fmt_seconds(clk.seconds()) + ")";
    return v;
}

Verdict a9() {
    Clock clk;
    Verdict v{"A9"};
    SweepConfig cfg;
    cfg.max_vertices = 8;
    auto corpus = generate_corpus(cfg);
    // claims keyed by the prefix of the counterexample message
    const std::vector<std::pair<std::string, std::string>> claims{
        {"no two non-adjacent", "two non-adjacent 2-vertices"},
        {"two 2-vertices", "exactly two 2-vertices are both genuine"},
        {"three 2-vertices", "among exactly three 2-vertices one is genuine"},
        {"two-colored triple", "a 2-colorable unchained triple is feasible"},
        {"edge dichotomy", "edge dichotomy"},
    };
    std::map<std::string, std::vector<std::string>> found;
    long errors = 0, three_with_triangle = 0, three_without_triangle = 0;
    for (const auto& g : corpus) {
        std::vector<std::string> ce;
        try {
            ce = structure_counterexamples(g);
        } catch (const Error& e) {
            ++errors;
            v.details.push_back(emit_graph6(g) + ": error " + e.what());
            continue;
        }
        for (const auto& c : ce) {
            if (c.rfind("three 2-vertices", 0) == 0) {
                bool on_triangle = false;
                for (VertexId x = 0; x < g.n(); ++x)
                    if (g.degree(x) == 2) {
                        auto nb = g.neighbors(x);
                        on_triangle = on_triangle || g.adjacent(nb[0], nb[1]);
                    }
                (on_triangle ? three_with_triangle : three_without_triangle)++;
            }
            std::string key = "other";
            for (const auto& [prefix, name] : claims)
                if (c.rfind(prefix, 0) == 0) key = name;
            found[key].push_back(emit_graph6(g) + ": " + c);
        }
    }

    // unique-3-coloring 2-trees: no (2,2,1) list extension for any anchor choice
    long trees = 0, triples = 0, extendable = 0, not_unique = 0, too_large = 0;
    for (const auto& t : enumerate_two_trees(8)) {
        ++trees;
        if (!has_unique_3_coloring(t)) {
            ++not_unique;
            continue;
        }
        const int n = t.n();
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (z == x || z == y) continue;
                    ++triples;
                    try {
                        auto r = is_f_choosable(t, extendability_capacity(n, {{x, 2}, {y, 2}, {z, 1}}));
                        if (r.choosable) {
                            ++extendable;
                            if (found["2-trees"].size() < 10)
                                found["2-trees"].push_back(emit_graph6(t) + " (" + std::to_string(x) + "," +
                                                           std::to_string(y) + "," + std::to_string(z) + ") extendable");
                        } else if (!r.witness || brute_force_L_colorable(t, *r.witness)) {
                            ++extendable;
                            found["2-trees"].push_back(emit_graph6(t) + ": witness does not refute");
                        }
                    } catch (const Error& e) {
                        if (e.code() != ErrorCode::TooLarge) throw;
                        ++too_large;
                    }
                }
    }

    std::ostringstream o;
    o << corpus.size() << " K4-minor-free graphs";
    bool pass = errors == 0;
    for (const auto& [prefix, name] : claims) {
        const auto it = found.find(name);
        const std::size_t k = it == found.end() ? 0 : it->second.size();
        o << "; " << name << ": " << k << " counterexamples";
        pass = pass && k == 0;
        if (k) {
            std::size_t shown = 0;
            for (const auto& s : it->second)
                if (shown++ < 20) v.details.push_back(name + ": " + s);
        }
    }
    if (found.count("other")) {
        pass = false;
        for (const auto& s : found["other"]) v.details.push_back(s);
    }
    o << "; 2-trees: " << trees << " trees, " << not_unique << " without a unique 3-coloring, " << triples
      << " anchor choices, " << extendable << " extendable, " << too_large << " too large";
    pass = pass && extendable == 0 && not_unique == 0 && too_large == 0;
    for (const auto& s : found["2-trees"]) v.details.push_back("2-trees: " + s);
    if (found.count("among exactly three 2-vertices one is genuine")) {
        v.details.push_back("analysis: " + std::to_string(three_without_triangle) +
                            " of these graphs have no 2-vertex on a triangle (e.g. K_{2,3}), " +
                            std::to_string(three_with_triangle) + " have one that fails both genuineness conditions.");
        v.details.push_back(
            "The reduction used to derive the claim can leave a graph outside its own hypotheses: the three-triangle "
            "book K_{1,1,3} (Ds{) loses all three 2-vertices and becomes a single edge, and K_{2,3} (Ds[) becomes a "
            "multigraph. The constructions fall back to a flagged capped search on such graphs, and A4 still "
            "verifies every certificate on them.");
    }
    o << " (" << fmt_seconds(clk.seconds()) << ")";
    v.pass = pass;
    v.summary = o.str();
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance runs"};
    bool strict = false;
    std::string report = "acceptance_report.txt";
    std::vector<std::string> only;
    app.add_flag("--strict", strict, "exit 1 if any criterion fails");
    app.add_option("--report", report, "report file");
    app.add_option("--only", only, "run only these criteria (A1..A9)");
    CLI11_PARSE(app, argc, argv);

    auto wanted = [&](const std::string& id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };

    auto cfg = [](ClassFilter cls, int maxv, int arity) {
        SweepConfig c;
        c.cls = cls;
        c.max_vertices = maxv;
        c.arity = arity;
        return c;
    };
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"A1", a1},
        {"A2", a2},
        {"A3", [&] { return sweep_verdict("A3", cfg(ClassFilter::K4mf, 8, 2)); }},
        {"A4", [&] { return sweep_verdict("A4", cfg(ClassFilter::K4mf, 8, 3)); }},
        {"A5", [&] { return sweep_verdict("A5", cfg(ClassFilter::K4mfTriangleFree, 9, 3)); }},
        {"A6", [&] { return sweep_verdict("A6", cfg(ClassFilter::Mad145, 7, 3)); }},
        {"A7", a7},
        {"A8", a8},
        {"A9", a9},
    };

    std::ofstream rep(report);
    int failed = 0;
    for (const auto& [id, run] : criteria) {
        if (!wanted(id)) continue;
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v = Verdict{id, false, std::string("error: ") + e.what()};
        }
        const std::string line = v.id + (v.pass ? " PASS " : " FAIL ") + v.summary;
        std::cout << line << std::endl;
        rep << line << '\n';
        for (const auto& d : v.details) rep << "    " << d << '\n';
        failed += !v.pass;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed"))
              << "; report in " << report << std::endl;
    return strict && failed ? 1 : 0;
}
