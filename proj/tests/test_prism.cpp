#include <catch2/catch_amalgamated.hpp>

#include "prismdom/prism.hpp"
#include "prismdom/universe.hpp"
#include "test_util.hpp"

using namespace prismdom;
using testutil::cycle_graph;
using testutil::path_graph;
using testutil::star_graph;

TEST_CASE("build_prism counts", "[prism]") {
    auto p3 = path_graph(3);
    PrismGraph idp = identity_prism(p3);
    REQUIRE(idp.graph.n == 6);
    REQUIRE(idp.graph.edge_count() == 7);  // 2*2 + 3

    PrismGraph c7p = build_prism(cycle_graph(7), parse_permutation(7, "(1 3)(4 6)"));
    REQUIRE(c7p.graph.n == 14);
    REQUIRE(c7p.graph.edge_count() == 21);

    PrismGraph starp = build_prism(star_graph(3), parse_permutation(4, "(0 1)"));
    REQUIRE(starp.graph.has_edge(0, starp.copy_of(1)));  // matching neighbor of 0 is copy-of-1

    REQUIRE_THROWS_AS(build_prism(p3, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("identity prism examples", "[prism]") {
    PrismGraph k2 = identity_prism(make_graph(1, {}));
    REQUIRE(k2.graph.n == 2);
    REQUIRE(k2.graph.edge_count() == 1);

    // Id C4 is the cube graph: check via the explicit coordinate embedding
    // 0->000, 1->001, 2->011, 3->010, copies flip the high bit.
    PrismGraph q3 = identity_prism(cycle_graph(4));
    REQUIRE(q3.graph.n == 8);
    REQUIRE(q3.graph.edge_count() == 12);
    for (int v = 0; v < 8; ++v) REQUIRE(q3.graph.degree(v) == 3);
    int gray[4] = {0, 1, 3, 2};
    auto coord = [&](int v) { return gray[v % 4] | (v / 4 << 2); };
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) {
            bool cube_edge = std::popcount(unsigned(coord(u) ^ coord(v))) == 1;
            REQUIRE(q3.graph.has_edge(u, v) == cube_edge);
        }

    PrismGraph p3 = identity_prism(path_graph(3));
    REQUIRE(all_pairs_distances(p3.graph).at(0, p3.copy_of(2)) == 3);
}

TEST_CASE("matching structure", "[prism]") {
    Rng rng(1207);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 1 + int(rng.below(8));
        Graph g = random_connected_graph(rng, n, 0.3);
        Permutation p = random_permutation(rng, n);
        PrismGraph pg = build_prism(g, p);
        REQUIRE(pg.graph.edge_count() == 2 * g.edge_count() + n);
        for (int v = 0; v < n; ++v) {
            // exactly one copy-side neighbor, namely copy(p(v))
            int copy_neighbors = 0;
            for (int w : pg.graph.adj[v])
                if (pg.is_copy(w)) {
                    ++copy_neighbors;
                    REQUIRE(w == pg.copy_of(p(v)));
                }
            REQUIRE(copy_neighbors == 1);
            REQUIRE(pg.graph.degree(v) == g.degree(v) + 1);
            REQUIRE(pg.graph.degree(pg.copy_of(v)) == g.degree(v) + 1);
        }
        // both layers induce the base graph
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                REQUIRE(pg.graph.has_edge(u, v) == g.has_edge(u, v));
                REQUIRE(pg.graph.has_edge(pg.copy_of(u), pg.copy_of(v)) == g.has_edge(u, v));
            }
    }
}

TEST_CASE("prism of inverse permutation is the layer swap", "[prism]") {
    Rng rng(88);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 1 + int(rng.below(7));
        Graph g = random_connected_graph(rng, n, 0.35);
        Permutation p = random_permutation(rng, n);
        PrismGraph a = build_prism(g, p);
        PrismGraph b = build_prism(g, p.inverse());
        auto swap_layer = [&](int v) { return v < n ? v + n : v - n; };
        std::vector<std::pair<int, int>> mapped;
        for (auto [u, v] : a.graph.edges) {
            int x = swap_layer(u), y = swap_layer(v);
            mapped.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(mapped.begin(), mapped.end());
        REQUIRE(mapped == b.graph.edges);
    }
}

TEST_CASE("identity prism preserves base distances", "[prism]") {
    Rng rng(404);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 2 + int(rng.below(6));
        Graph g = random_connected_graph(rng, n, 0.3);
        PrismGraph pg = identity_prism(g);
        DistanceMatrix dg = all_pairs_distances(g);
        DistanceMatrix dp = all_pairs_distances(pg.graph);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) REQUIRE(dp.at(u, v) == dg.at(u, v));
    }
}

TEST_CASE("lift_set and parts", "[prism]") {
    Graph c7 = cycle_graph(7);
    PrismGraph pg = build_prism(c7, parse_permutation(7, "(1 3)(4 6)"));

    VertexSet single = lift_set(pg, VertexSet::of(7, {0}), VertexSet::of(7, {0}));
    REQUIRE(single == VertexSet::of(14, {0, 7}));

    VertexSet witness = lift_set(pg, VertexSet::of(7, {0, 1, 6}), VertexSet::of(7, {0, 1, 6}));
    REQUIRE(witness == VertexSet::of(14, {0, 1, 6, 7, 8, 13}));

    REQUIRE(lift_set(pg, VertexSet(7), VertexSet::full(7)) ==
            VertexSet::of(14, {7, 8, 9, 10, 11, 12, 13}));

    REQUIRE(base_part(pg, witness) == VertexSet::of(7, {0, 1, 6}));
    REQUIRE(copy_part(pg, witness) == VertexSet::of(7, {0, 1, 6}));
    REQUIRE(pg.vertex_name(13) == "6'");
    REQUIRE(pg.vertex_name(6) == "6");
}
