#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atx/enumerate.hpp"
#include "atx/structure.hpp"
#include "oracles.hpp"

using namespace atx;

namespace {
const Graph& d1() {
    static Graph g = chain_of_diamonds(1).graph;  // u0=0 v1=1 w1=2 u1=3
    return g;
}
Graph wheel4() { return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}); }
}  // namespace

TEST_CASE("K4 minors") {
    CHECK_FALSE(is_k4_minor_free(complete_graph(4)));
    CHECK(is_k4_minor_free(path_graph(6)));
    CHECK(is_k4_minor_free(cycle_graph(7)));
    CHECK(is_k4_minor_free(chain_of_diamonds(3).graph));
    CHECK_FALSE(is_k4_minor_free(wheel4()));
    CHECK_FALSE(is_k4_minor_free(subdivide_all_edges(complete_graph(4))));
    for (const auto& g : enumerate_graphs({7, 1, false, nullptr})) CHECK(is_k4_minor_free(g) == !oracle::has_k4_minor(g));
}

TEST_CASE("K4 minors on 8 and 9 vertices") {
    // sparse samples keep the oracle affordable
    int checked = 0;
    for (const auto& g : enumerate_graphs({9, 8, true, [](const Graph& h) { return h.m() <= h.n() + 3; }})) {
        if (g.n() < 8) continue;
        CHECK(is_k4_minor_free(g) == !oracle::has_k4_minor(g));
        if (++checked == 400) break;
    }
    CHECK(checked > 100);
}

TEST_CASE("triangle-free") {
    CHECK(is_triangle_free(cycle_graph(6)));
    CHECK_FALSE(is_triangle_free(d1()));
    CHECK_FALSE(is_triangle_free(complete_graph(4)));
}

TEST_CASE("diamond links") {
    auto l = diamond_link_graph(d1());
    REQUIRE(l.links.size() == 1);
    CHECK(l.links[0].a == 0);
    CHECK(l.links[0].b == 3);
    CHECK(l.links[0].p == 1);
    CHECK(l.links[0].q == 2);
    CHECK(diamond_link_graph(cycle_graph(6)).links.empty());
    CHECK(diamond_link_graph(complete_graph(4)).links.size() == 6);
    for (const auto& g : enumerate_graphs({7, 1, false, nullptr})) {
        auto links = diamond_link_graph(g);
        std::set<std::pair<int, int>> have;
        for (const auto& k : links.links) {
            have.insert({k.a, k.b});
            CHECK(g.adjacent(k.p, k.q));
        }
        for (int a = 0; a < g.n(); ++a)
            for (int b = a + 1; b < g.n(); ++b) CHECK(have.count({a, b}) == oracle::diamond_maps(g, a, b));
    }
}

TEST_CASE("chain connectivity") {
    CHECK(is_chain_connected(d1(), {0, 3}));
    CHECK_FALSE(is_chain_connected(d1(), {0, 1}));
    CHECK_FALSE(is_chain_connected(cycle_graph(5), {0}));
    CHECK_FALSE(is_chain_connected(cycle_graph(5), {0, 2}));
    auto d3 = chain_of_diamonds(3);
    CHECK(is_chain_connected(d3.graph, d3.hubs));
    // a vertex on a triangle is the image of a folded diamond
    CHECK(is_chain_connected(d1(), {1}));
    // homomorphism search agrees on every pair and triple
    for (const auto& g : enumerate_graphs({6, 1, true, nullptr})) {
        const int n = g.n();
        for (int a = 0; a < n; ++a) {
            CHECK(is_chain_connected(g, {a}) == oracle::chain_connected(g, {a}));
            for (int b = a + 1; b < n; ++b) {
                CHECK(is_chain_connected(g, {a, b}) == oracle::chain_connected(g, {a, b}));
                for (int c = b + 1; c < n; ++c)
                    CHECK(is_chain_connected(g, {a, b, c}) == oracle::chain_connected(g, {a, b, c}));
            }
        }
        // chained sets are monochromatic in every proper 3-coloring
        auto cols = oracle::all_3_colorings(g);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (is_chain_connected(g, {a, b}))
                    for (const auto& c : cols) CHECK(c[a] == c[b]);
    }
}

TEST_CASE("feasible and blocked triples") {
    CHECK_FALSE(is_feasible_triple(complete_graph(3), 0, 1, 2));
    CHECK(is_feasible_triple(path_graph(3), 0, 1, 2));
    CHECK(is_feasible_triple(d1(), 0, 3, 1));
    CHECK(is_blocked_triple(complete_graph(3), 0, 1, 2));
    CHECK_FALSE(is_blocked_triple(path_graph(3), 0, 1, 2));
    CHECK_FALSE(is_blocked_triple(d1(), 0, 3, 2));
    CHECK_THROWS_AS(is_blocked_triple(complete_graph(4), 0, 1, 2), Error);

    for (const auto& g : enumerate_graphs({6, 3, false, nullptr})) {
        const int n = g.n();
        auto cols = oracle::all_3_colorings(g);
        if (cols.empty()) continue;
        ColoringProfile prof(g);
        auto links = diamond_link_graph(g);
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                for (int z = y + 1; z < n; ++z) {
                    std::uint8_t mask = 0;
                    for (const auto& c : cols) {
                        std::set<int> s{c[x], c[y], c[z]};
                        mask |= 1 << (s.size() - 1);
                    }
                    CHECK(triple_color_sizes(g, x, y, z) == mask);
                    CHECK(prof.triple_mask(z, x, y) == mask);
                    const bool feasible = (mask & 0b011) && !oracle::chain_connected(g, {x, y, z});
                    CHECK(is_feasible_triple(g, x, y, z) == feasible);
                    CHECK(is_feasible_triple(g, links, prof, y, z, x) == feasible);
                    const bool blocked = mask == 0b100 || mask == 0b001;
                    CHECK(is_blocked_triple(g, x, y, z) == blocked);
                    if (blocked && is_k4_minor_free(g)) CHECK_FALSE(feasible);
                }
    }
}

TEST_CASE("coloring to feasibility and the edge dichotomy") {
    CHECK(feasible_from_coloring(d1(), {0, 3, 1}));
    CHECK(feasible_from_coloring(complete_graph(3), {0, 1, 2}));
    CHECK_THROWS_AS(feasible_from_coloring(complete_graph(4), {0, 1, 2}), Error);
    CHECK(edge_feasibility_dichotomy(d1(), 1, 2, 0, 3));
    CHECK_THROWS_AS(edge_feasibility_dichotomy(d1(), 0, 3, 1, 2), Error);
}

TEST_CASE("genuine 2-vertices") {
    CHECK(genuine_2_vertices(d1()) == std::vector<VertexId>{0, 3});
    CHECK(two_nonadjacent_2vertices(d1()));
    CHECK_THROWS_AS(genuine_2_vertices(path_graph(4)), Error);
    CHECK_THROWS_AS(two_nonadjacent_2vertices(cycle_graph(5)), Error);
    // K_{2,3}: three 2-vertices, none on a triangle, so none genuine
    Graph k23 = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(genuine_2_vertices(k23).empty());
    CHECK(two_nonadjacent_2vertices(k23));
}

TEST_CASE("blocks and Gallai trees") {
    CHECK(is_gallai_tree(cycle_graph(5)));
    CHECK_FALSE(is_gallai_tree(cycle_graph(4)));
    CHECK(is_gallai_tree(make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}})));
    CHECK(is_gallai_tree(path_graph(4)));
    CHECK_FALSE(is_gallai_tree(d1()));
    CHECK_THROWS_AS(is_gallai_tree(make_graph(3, {{0, 1}})), Error);
    auto bd = block_decomposition(make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}}));
    CHECK(bd.blocks.size() == 3);
    CHECK(bd.cut_vertices == std::vector<VertexId>{2, 3});
    // blocks partition the edges
    for (const auto& g : enumerate_graphs({6, 1, false, nullptr})) {
        auto b = block_decomposition(g);
        std::multiset<Edge> all;
        for (const auto& blk : b.blocks)
            for (auto e : blk) all.insert(e);
        CHECK(all == std::multiset<Edge>(g.edges().begin(), g.edges().end()));
    }
}
