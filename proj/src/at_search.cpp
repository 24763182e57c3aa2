#include "atx/at_search.hpp"

#include <algorithm>
#include <set>

#include "atx/structure.hpp"

namespace atx {

namespace {

struct CappedSearch {
    const Graph& g;
    const CapacityMap& f;
    std::vector<Arc> chosen;
    std::vector<int> out;
    int slack = 0;  // total remaining out-capacity
    std::optional<ATCertificate> found;

    bool run(int e) {
        if (e == g.m()) {
            Orientation d(g.n(), chosen);
            DiffResult r = compute_diff(d);
            if (r.diff() == 0) return false;
            found = ATCertificate{std::move(d), f, r};
            return true;
        }
        if (slack < g.m() - e) return false;
        auto [u, v] = g.edges()[e];
        for (auto [t, h] : {Arc{u, v}, Arc{v, u}}) {
            if (out[t] >= f.out_cap(t)) continue;
            ++out[t];
            --slack;
            chosen[e] = {t, h};
            bool done = run(e + 1);
            ++slack;
            --out[t];
            if (done) return true;
        }
        return false;
    }
};

} // namespace

std::optional<ATCertificate> is_f_AT(const Graph& g, const CapacityMap& f) {
    if (f.size() != g.n()) fail(ErrorCode::InvalidParameter, "capacity map size differs from vertex count");
    CappedSearch s{g, f, std::vector<Arc>(g.m()), std::vector<int>(g.n(), 0), 0, std::nullopt};
    for (VertexId v = 0; v < g.n(); ++v) s.slack += f.out_cap(v);
    s.run(0);
    return std::move(s.found);
}

int alon_tarsi_number(const Graph& g) {
    if (g.m() > 24) fail(ErrorCode::TooLarge, "Alon-Tarsi number search is limited to 24 edges");
    // An acyclic orientation along a degeneracy order always works at degeneracy+1.
    const int upper = degeneracy(g) + 1;
    for (int k = 1; k < upper; ++k)
        if (is_f_AT(g, CapacityMap::constant(g.n(), k))) return k;
    return upper;
}

std::optional<ATCertificate> degree_AT_orientation(const Graph& g) {
    if (g.n() > 13) fail(ErrorCode::TooLarge, "degree-AT search is limited to 13 vertices");
    if (is_gallai_tree(g)) return std::nullopt;
    std::vector<int> caps(g.n());
    for (VertexId v = 0; v < g.n(); ++v) caps[v] = g.degree(v);
    return is_f_AT(g, CapacityMap(std::move(caps)));
}

bool verify_certificate(const ATCertificate& cert) {
    const auto& d = cert.orientation;
    if (cert.caps.size() != d.n()) return false;
    for (VertexId v = 0; v < d.n(); ++v)
        if (d.out_degree(v) > cert.caps.out_cap(v)) return false;
    DiffResult r = compute_diff(d);
    return r == cert.result && r.diff() != 0;
}

bool verify_certificate(const Graph& g, const ATCertificate& cert) {
    return cert.orientation.orients(g) && verify_certificate(cert);
}

Orientation glue_at_cutvertex(const Orientation& d1, const Orientation& d2, VertexId u) {
    auto support = [](const Orientation& d) {
        std::set<VertexId> s;
        for (auto a : d.arcs()) s.insert({a.tail, a.head});
        return s;
    };
    auto s1 = support(d1), s2 = support(d2);
    for (VertexId v : s1)
        if (v != u && s2.count(v)) fail(ErrorCode::NotACutVertex, "orientations share a vertex other than the cut vertex");
    std::vector<Arc> arcs(d1.arcs());
    arcs.insert(arcs.end(), d2.arcs().begin(), d2.arcs().end());
    return Orientation(std::max({d1.n(), d2.n(), u + 1}), std::move(arcs));
}

bool triangle_reduce_check(const Orientation& d, VertexId u1, VertexId u2, VertexId u3, VertexId u4) {
    const std::set<VertexId> ids{u1, u2, u3, u4};
    if (ids.size() != 4 || *ids.begin() < 0 || *ids.rbegin() >= d.n())
        fail(ErrorCode::PatternMismatch, "pattern needs four distinct vertices");
    std::multiset<Arc> at_pattern;
    std::vector<Arc> rest;
    for (auto a : d.arcs()) {
        bool touches = a.tail == u1 || a.head == u1 || a.tail == u2 || a.head == u2;
        if (touches)
            at_pattern.insert(a);
        else
            rest.push_back(a);
    }
    const std::multiset<Arc> want{{u1, u3}, {u2, u1}, {u2, u3}, {u4, u2}};
    if (at_pattern != want)
        fail(ErrorCode::PatternMismatch, "arcs at u1,u2 do not match the triangle pattern");
    return compute_diff(d).diff() == compute_diff(Orientation(d.n(), std::move(rest))).diff();
}

} // namespace atx
