#include "atx/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

#include "atx/diff.hpp"
#include "atx/enumerate.hpp"
#include "atx/graph_io.hpp"
#include "atx/mad.hpp"
#include "atx/structure.hpp"

namespace atx {

ClassFilter parse_class_filter(const std::string& name) {
    if (name == "k4mf") return ClassFilter::K4mf;
    if (name == "k4mf-trianglefree") return ClassFilter::K4mfTriangleFree;
    if (name == "mad145") return ClassFilter::Mad145;
    if (name == "all") return ClassFilter::All;
    fail(ErrorCode::InvalidParameter, "unknown class filter '" + name + "'");
}

std::string_view to_string(ClassFilter cls) {
    switch (cls) {
    case ClassFilter::K4mf: return "k4mf";
    case ClassFilter::K4mfTriangleFree: return "k4mf-trianglefree";
    case ClassFilter::Mad145: return "mad145";
    case ClassFilter::All: return "all";
    }
    return "?";
}

bool in_class(const Graph& g, ClassFilter cls) {
    switch (cls) {
    case ClassFilter::K4mf: return is_k4_minor_free(g);
    case ClassFilter::K4mfTriangleFree: return is_triangle_free(g) && is_k4_minor_free(g);
    case ClassFilter::Mad145: return g.n() == 0 || max_average_degree(g) < mad_threshold();
    case ClassFilter::All: return true;
    }
    return false;
}

Json GraphReport::to_json() const {
    Json j;
    j["graph"] = graph6;
    j["n"] = n;
    j["m"] = m;
    j["tuples"] = tuples;
    j["certificates"] = certificates;
    j["witnesses"] = witnesses;
    j["flagged"] = flagged;
    if (largest_kernel) j["largestKernel"] = largest_kernel;
    j["counterexamples"] = counterexamples;
    return j;
}

std::vector<Graph> generate_corpus(const SweepConfig& config) {
    if (config.max_vertices > 10) fail(ErrorCode::TooLarge, "exhaustive corpora stop at 10 vertices");
    EnumerationOptions opt;
    opt.max_vertices = config.max_vertices;
    opt.min_vertices = std::max(1, config.min_vertices);
    opt.connected_only = true;
    if (config.cls != ClassFilter::All) {
        const ClassFilter cls = config.cls;
        opt.hereditary = [cls](const Graph& g) { return in_class(g, cls); };
    }
    return enumerate_graphs(opt);
}

bool brute_force_L_colorable(const Graph& g, const ListAssignment& lists) {
    const int n = g.n();
    if (lists.n() != n) fail(ErrorCode::InvalidInput, "list assignment size differs from the graph");
    std::vector<int> color(n, 0);
    std::vector<std::size_t> pos(n, 0);
    // Odometer over the list product, rejecting at the first clash with an earlier vertex.
    int v = 0;
    while (v >= 0) {
        if (v == n) return true;
        if (pos[v] >= lists[v].size()) {
            pos[v] = 0;
            --v;
            if (v >= 0) ++pos[v];
            continue;
        }
        color[v] = lists[v][pos[v]];
        bool ok = true;
        for (VertexId u : g.neighbors(v))
            if (u < v && color[u] == color[v]) ok = false;
        if (ok)
            ++v;
        else
            ++pos[v];
    }
    return false;
}

bool independent_certificate_check(const Graph& g, const ATCertificate& cert, std::string* why) {
    auto bad = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    const auto& d = cert.orientation;
    if (d.n() != g.n() || cert.caps.size() != g.n()) return bad("vertex count mismatch");
    std::vector<int> seen(g.m(), 0), out(g.n(), 0);
    for (auto a : d.arcs()) {
        if (a.tail < 0 || a.head < 0 || a.tail >= g.n() || a.head >= g.n()) return bad("arc out of range");
        auto e = g.edge_index(a.tail, a.head);
        if (!e) return bad("arc is not an edge");
        if (seen[*e]++) return bad("edge oriented twice");
        ++out[a.tail];
    }
    if (std::count(seen.begin(), seen.end(), 0)) return bad("edge left unoriented");
    for (int v = 0; v < g.n(); ++v)
        if (out[v] > cert.caps[v] - 1) return bad("out-degree exceeds cap at " + std::to_string(v));
    const DiffResult r = compute_diff(d);
    if (!(r == cert.result)) return bad("recorded diff differs from recomputation");
    if (r.diff() == 0) return bad("diff is zero");
    const auto coef = coefficient_oracle(d);
    if (coef != (r.diff() < 0 ? -r.diff() : r.diff())) return bad("polynomial coefficient disagrees with diff");
    return true;
}

namespace {

using Tuple = std::vector<VertexId>;

std::vector<Tuple> ordered_tuples(int n, int arity) {
    std::vector<Tuple> out;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            if (arity == 2) {
                out.push_back({x, y});
                continue;
            }
            for (int z = 0; z < n; ++z)
                if (z != x && z != y) out.push_back({x, y, z});
        }
    return out;
}

std::string tuple_str(const Tuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

struct Checker {
    const Graph& g;
    GraphReport& rep;

    void counter(const std::string& what, const Tuple& t) { rep.counterexamples.push_back(what + " at " + tuple_str(t)); }

    CapacityMap caps(const Tuple& t, std::initializer_list<int> a) const {
        std::vector<std::pair<VertexId, int>> anchors;
        auto it = a.begin();
        for (VertexId v : t) anchors.push_back({v, *it++});
        return extendability_capacity(g.n(), anchors);
    }

    void certificate(const Construction& c, const CapacityMap& expected, const Tuple& t, const char* name) {
        std::string why;
        if (!(c.certificate.caps == expected)) return counter(std::string(name) + ": wrong caps", t);
        if (!independent_certificate_check(g, c.certificate, &why)) return counter(std::string(name) + ": " + why, t);
        if (!verify_trace(c.trace, c.certificate, &why)) return counter(std::string(name) + ": trace " + why, t);
        ++rep.certificates;
        if (c.trace.flagged()) ++rep.flagged;
    }

    // Each assignment must match the capacity sizes; `all` asks every one to be uncolorable.
    void witnesses(const std::vector<ListAssignment>& lists, const CapacityMap& f, bool all, const Tuple& t,
                   const char* name) {
        if (lists.empty()) return counter(std::string(name) + ": no witness lists", t);
        int refuting = 0;
        for (const auto& l : lists) {
            bool sized = l.n() == g.n();
            for (int v = 0; sized && v < g.n(); ++v) sized = static_cast<int>(l[v].size()) == f[v];
            if (!sized) return counter(std::string(name) + ": witness list sizes differ from f", t);
            if (!brute_force_L_colorable(g, l)) ++refuting;
        }
        if (refuting == 0 || (all && refuting != static_cast<int>(lists.size())))
            return counter(std::string(name) + ": witness lists admit a coloring", t);
        ++rep.witnesses;
    }
};

void check_pair_k4mf(Checker& ck, const Tuple& t) {
    const auto& g = ck.g;
    const VertexId x = t[0], y = t[1];
    ck.certificate(construct_22_orientation(g, x, y), ck.caps(t, {2, 2}), t, "22");
    const bool chained = is_chain_connected(g, {x, y});
    auto o = construct_21_orientation(g, x, y);
    const auto f21 = ck.caps(t, {2, 1});
    if (o.ok() == chained) return ck.counter(chained ? "21: certificate on a chained pair" : "21: unchained pair refused", t);
    if (o.ok())
        ck.certificate(*o.construction, f21, t, "21");
    else
        ck.witnesses(o.witness_lists, f21, true, t, "21");
}

void check_triple_k4mf(Checker& ck, const Tuple& t, const DiamondLinkGraph& links, const ColoringProfile& prof) {
    const bool feasible = is_feasible_triple(ck.g, links, prof, t[0], t[1], t[2]);
    auto o = construct_222_orientation(ck.g, t[0], t[1], t[2]);
    const auto f = ck.caps(t, {2, 2, 2});
    if (o.ok() != feasible) return ck.counter(feasible ? "222: feasible triple refused" : "222: certificate on infeasible triple", t);
    if (o.ok())
        ck.certificate(*o.construction, f, t, "222");
    else
        ck.witnesses(o.witness_lists, f, false, t, "222");
}

void check_triple_221(Checker& ck, const Tuple& t) {
    ck.certificate(construct_221_trianglefree(ck.g, t[0], t[1], t[2]), ck.caps(t, {2, 2, 1}), t, "221");
}

void check_triple_mad(Checker& ck, const Tuple& t, const ColoringProfile& prof) {
    const bool blocked = is_blocked_triple(prof, t[0], t[1], t[2]);
    auto m = construct_mad_222(ck.g, t[0], t[1], t[2]);
    ck.rep.largest_kernel = std::max(ck.rep.largest_kernel, m.largest_kernel);
    if (m.largest_kernel > 8) ck.counter("mad222: kernel with " + std::to_string(m.largest_kernel) + " vertices", t);
    const auto f = ck.caps(t, {2, 2, 2});
    if (m.outcome.ok() == blocked) return ck.counter(blocked ? "mad222: certificate on blocked triple" : "mad222: non-blocked triple refused", t);
    if (m.outcome.ok())
        ck.certificate(*m.outcome.construction, f, t, "mad222");
    else
        ck.witnesses(m.outcome.witness_lists, f, true, t, "mad222");
}

void check_tuple_all(Checker& ck, const Tuple& t) {
    std::vector<std::pair<VertexId, int>> anchors;
    for (VertexId v : t) anchors.push_back({v, 2});
    const auto f = extendability_capacity(ck.g.n(), anchors);
    auto cert = is_f_AT(ck.g, f);
    if (!cert) return;
    std::string why;
    if (!independent_certificate_check(ck.g, *cert, &why)) return ck.counter("at: " + why, t);
    ++ck.rep.certificates;
    auto ch = is_f_choosable(ck.g, f);
    if (!ch.choosable) ck.counter("at: AT graph not choosable", t);
}

} // namespace

std::vector<std::string> structure_counterexamples(const Graph& g) {
    std::vector<std::string> out;
    if (!is_connected(g) || !is_k4_minor_free(g)) return out;
    const int n = g.n();
    if (n >= 3 && g.min_degree() == 2 && g.max_degree() > 2) {
        if (!two_nonadjacent_2vertices(g)) out.push_back("no two non-adjacent 2-vertices");
        std::vector<VertexId> twos;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 2) twos.push_back(v);
        auto genuine = genuine_2_vertices(g);
        if (twos.size() == 2 && genuine.size() != 2) out.push_back("two 2-vertices, not both genuine");
        if (twos.size() == 3 && genuine.empty()) out.push_back("three 2-vertices, none genuine");
    }
    if (n >= 3) {
        ColoringProfile prof(g);
        DiamondLinkGraph links = diamond_link_graph(g);
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                for (int z = y + 1; z < n; ++z) {
                    const bool two = prof.triple_mask(x, y, z) & 0b010;
                    if (two && !is_feasible_triple(g, links, prof, x, y, z))
                        out.push_back("two-colored triple " + tuple_str({x, y, z}) + " not feasible");
                }
        for (const auto& e : g.edges())
            for (int y = 0; y < n; ++y)
                for (int z = y + 1; z < n; ++z) {
                    if (y == e.u || y == e.v || z == e.u || z == e.v) continue;
                    if (!is_feasible_triple(g, links, prof, e.u, y, z) && !is_feasible_triple(g, links, prof, e.v, y, z))
                        out.push_back("edge dichotomy fails at " + tuple_str({e.u, e.v, y, z}));
                }
    }
    return out;
}

static void validate_config(const SweepConfig& config) {
    if (config.arity != 2 && config.arity != 3) fail(ErrorCode::InvalidParameter, "arity must be 2 or 3");
    if (config.cls == ClassFilter::Mad145 && config.arity != 3) fail(ErrorCode::InvalidParameter, "mad145 sweeps use triples");
    if (config.workers < 1) fail(ErrorCode::InvalidParameter, "workers must be positive");
}

GraphReport check_graph(const Graph& g, const SweepConfig& config, std::uint64_t index) {
    GraphReport rep;
    rep.graph6 = emit_graph6(g);
    rep.n = g.n();
    rep.m = g.m();
    validate_config(config);
    Checker ck{g, rep};

    auto tuples = ordered_tuples(g.n(), config.arity);
    if (config.sample > 0 && static_cast<int>(tuples.size()) > config.sample) {
        std::mt19937_64 rng(config.seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        std::shuffle(tuples.begin(), tuples.end(), rng);
        tuples.resize(config.sample);
        std::sort(tuples.begin(), tuples.end());
    }

    const bool k4 = config.cls == ClassFilter::K4mf || config.cls == ClassFilter::K4mfTriangleFree;
    std::optional<ColoringProfile> prof;
    std::optional<DiamondLinkGraph> links;
    if (config.arity == 3 && (k4 || config.cls == ClassFilter::Mad145)) {
        prof.emplace(g);
        links = diamond_link_graph(g);
    }
    for (const auto& t : tuples) {
        ++rep.tuples;
        try {
            if (config.cls == ClassFilter::All)
                check_tuple_all(ck, t);
            else if (config.cls == ClassFilter::Mad145)
                check_triple_mad(ck, t, *prof);
            else if (config.arity == 2)
                check_pair_k4mf(ck, t);
            else {
                check_triple_k4mf(ck, t, *links, *prof);
                if (config.cls == ClassFilter::K4mfTriangleFree) check_triple_221(ck, t);
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ContractViolation) ++rep.contract_violations;
            ck.counter(std::string("error ") + e.what(), t);
        }
    }
    if (config.structure && k4) {
        try {
            for (auto& s : structure_counterexamples(g)) rep.counterexamples.push_back(std::move(s));
        } catch (const Error& e) {
            rep.counterexamples.push_back(std::string("structure error ") + e.what());
        }
    }
    return rep;
}

SweepSummary run_sweep(const std::vector<Graph>& graphs, const SweepConfig& config, std::ostream* out) {
    validate_config(config);  // before any worker starts
    const auto start = std::chrono::steady_clock::now();
    const std::size_t total = graphs.size();
    std::vector<std::optional<GraphReport>> done(total);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total) return;
            GraphReport r = check_graph(graphs[i], config, i);
            {
                std::lock_guard lock(mu);
                done[i] = std::move(r);
            }
            cv.notify_one();
        }
    };
    const int workers = std::max(1, config.workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);

    SweepSummary s;
    // Sequencing buffer: emit report i only after 0..i-1.
    for (std::size_t i = 0; i < total; ++i) {
        GraphReport r;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return done[i].has_value(); });
            r = std::move(*done[i]);
            done[i].reset();
        }
        ++s.graphs;
        s.tuples += r.tuples;
        s.certificates += r.certificates;
        s.witnesses += r.witnesses;
        s.flagged += r.flagged;
        s.counterexamples += static_cast<long>(r.counterexamples.size());
        s.contract_violations += r.contract_violations;
        s.largest_kernel = std::max(s.largest_kernel, r.largest_kernel);
        if (out) *out << r.to_json().dump() << '\n';
    }
    for (auto& t : pool) t.join();
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

TightnessSearch search_tightness_witness(int max_vertices) {
    if (max_vertices > 10) fail(ErrorCode::TooLarge, "tightness search stops at 10 vertices");
    TightnessSearch res;
    const ExactRational bound = mad_threshold();
    EnumerationOptions opt;
    opt.max_vertices = max_vertices;
    opt.min_vertices = 1;
    opt.connected_only = true;
    opt.hereditary = [&](const Graph& g) { return g.n() == 0 || max_average_degree(g) <= bound; };

    enumerate_levels(opt, [&](int n, const std::vector<Graph>& level) {
        res.reached_vertices = n;
        for (const Graph& g : level) {
            if (max_average_degree(g) != bound) continue;
            ++res.graphs_examined;
            ColoringProfile prof(g);
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y)
                    for (int z = y + 1; z < n; ++z) {
                        if (is_blocked_triple(prof, x, y, z)) continue;
                        ++res.triples_examined;
                        const auto f = extendability_capacity(n, {{x, 2}, {y, 2}, {z, 2}});
                        if (is_f_AT(g, f)) continue;
                        ChoosabilityResult ch;
                        try {
                            ch = is_f_choosable(g, f);
                        } catch (const Error& e) {
                            if (e.code() != ErrorCode::TooLarge) throw;
                            ++res.skipped_too_large;
                            continue;
                        }
                        if (ch.choosable) continue;
                        TightnessWitness w{g, {x, y, z}, *ch.witness, false};
                        bool sized = true;
                        for (int v = 0; v < n; ++v) sized = sized && static_cast<int>(w.lists[v].size()) == f[v];
                        w.verified = sized && !brute_force_L_colorable(g, w.lists);
                        res.witness = std::move(w);
                        return false;
                    }
        }
        return true;
    });
    return res;
}

} // namespace atx
