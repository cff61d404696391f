#include <catch2/catch_amalgamated.hpp>

#include "prismdom/geodesic.hpp"
#include "prismdom/prism.hpp"
#include "prismdom/universe.hpp"
#include "test_util.hpp"

using namespace prismdom;
using testutil::cycle_graph;
using testutil::path_graph;
using testutil::star_graph;

namespace {

// Path-enumeration definitions of the two convexity notions, used as the
// independent oracle for the fast predicates.
bool wcon_by_paths(const Graph& g, const VertexSet& s) {
    auto members = s.to_vector();
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j) {
            bool any_inside = false;
            for (const auto& path : enumerate_geodesics(g, members[i], members[j])) {
                bool inside = true;
                for (int w : path)
                    if (!s.contains(w)) {
                        inside = false;
                        break;
                    }
                if (inside) {
                    any_inside = true;
                    break;
                }
            }
            if (!any_inside) return false;
        }
    return true;
}

bool convex_by_paths(const Graph& g, const VertexSet& s) {
    auto members = s.to_vector();
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            for (const auto& path : enumerate_geodesics(g, members[i], members[j]))
                for (int w : path)
                    if (!s.contains(w)) return false;
    return true;
}

}  // namespace

TEST_CASE("interval", "[geodesic]") {
    Graph c7 = cycle_graph(7);
    DistanceMatrix d = all_pairs_distances(c7);
    REQUIRE(interval(d, 0, 3) == VertexSet::of(7, {0, 1, 2, 3}));
    REQUIRE(interval(d, 2, 2) == VertexSet::of(7, {2}));

    Graph c4 = cycle_graph(4);
    REQUIRE(interval(all_pairs_distances(c4), 0, 2) == VertexSet::full(4));

    Graph split = make_graph(4, {{0, 1}, {2, 3}});
    REQUIRE_THROWS_AS(interval(all_pairs_distances(split), 0, 2), std::invalid_argument);
}

TEST_CASE("is_connected_set", "[geodesic]") {
    Graph p6 = path_graph(6);
    REQUIRE(is_connected_set(p6, VertexSet::of(6, {0, 1, 2})));
    REQUIRE_FALSE(is_connected_set(p6, VertexSet::of(6, {0, 2})));
    REQUIRE(is_connected_set(p6, VertexSet(6)));
    REQUIRE(is_connected_set(p6, VertexSet::of(6, {4})));

    PrismGraph pg = build_prism(cycle_graph(7), parse_permutation(7, "(1 3)(4 6)"));
    REQUIRE(is_connected_set(pg.graph, VertexSet::of(14, {0, 1, 6, 7, 8, 13})));
}

TEST_CASE("is_weakly_convex", "[geodesic]") {
    Graph c7 = cycle_graph(7);
    DistanceMatrix d = all_pairs_distances(c7);
    REQUIRE(is_weakly_convex(c7, d, VertexSet::full(7)));
    // d(0,5)=2 in C7 but the arc forces a longer detour inside the set
    REQUIRE_FALSE(is_weakly_convex(c7, d, VertexSet::of(7, {0, 1, 2, 3, 4, 5})));
    REQUIRE(is_weakly_convex(c7, d, VertexSet(7)));
    REQUIRE(is_weakly_convex(c7, d, VertexSet::of(7, {3})));

    // P4 with pi=(0 1)(2 3): D = {0',1,2,3'} is weakly convex in the prism
    PrismGraph pg = build_prism(path_graph(4), parse_permutation(4, "(0 1)(2 3)"));
    DistanceMatrix dp = all_pairs_distances(pg.graph);
    VertexSet dset = VertexSet::of(8, {pg.copy_of(0), 1, 2, pg.copy_of(3)});
    REQUIRE(is_weakly_convex(pg.graph, dp, dset));
    REQUIRE(is_weakly_convex_dominating(pg.graph, dp, dset));
}

TEST_CASE("is_convex", "[geodesic]") {
    Graph c4 = cycle_graph(4);
    REQUIRE(is_convex(c4, all_pairs_distances(c4), VertexSet::full(4)));
    REQUIRE_FALSE(is_convex(c4, all_pairs_distances(c4), VertexSet::of(4, {0, 2})));

    Graph p3 = path_graph(3);
    DistanceMatrix d3 = all_pairs_distances(p3);
    REQUIRE(is_convex(p3, d3, VertexSet::of(3, {1})));
    REQUIRE(is_convex_dominating(p3, d3, VertexSet::of(3, {1})));

    // ... but {1} does not dominate the (0 1)-prism of P3
    PrismGraph pg = build_prism(p3, parse_permutation(3, "(0 1)"));
    REQUIRE_FALSE(is_dominating(pg.graph, VertexSet::of(6, {1})));
}

TEST_CASE("enumerate_geodesics", "[geodesic]") {
    REQUIRE(enumerate_geodesics(cycle_graph(7), 0, 3).size() == 1);
    REQUIRE(enumerate_geodesics(cycle_graph(4), 0, 2).size() == 2);
    auto star_paths = enumerate_geodesics(star_graph(3), 1, 2);
    REQUIRE(star_paths.size() == 1);
    REQUIRE(star_paths[0] == std::vector<int>{1, 0, 2});
    REQUIRE(enumerate_geodesics(path_graph(4), 2, 2) == std::vector<std::vector<int>>{{2}});

    REQUIRE_THROWS_AS(enumerate_geodesics(path_graph(20), 0, 19), EnumerationOverflow);
    REQUIRE_THROWS_AS(enumerate_geodesics(cycle_graph(4), 0, 2, 15, 1), EnumerationOverflow);
    REQUIRE_THROWS_AS(enumerate_geodesics(make_graph(2, {}), 0, 1), std::invalid_argument);
}

TEST_CASE("combined dominating predicates", "[geodesic]") {
    PrismGraph pg = build_prism(cycle_graph(7), parse_permutation(7, "(1 3)(4 6)"));
    DistanceMatrix d = all_pairs_distances(pg.graph);
    VertexSet witness = VertexSet::of(14, {0, 1, 6, 7, 8, 13});
    REQUIRE(is_weakly_convex_dominating(pg.graph, d, witness));

    Graph p6 = path_graph(6);
    REQUIRE(is_weakly_convex_dominating(p6, all_pairs_distances(p6), VertexSet::of(6, {1, 2, 3, 4})));
}

TEST_CASE("predicates agree with the path-enumeration oracle", "[geodesic]") {
    Rng rng(624);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 2 + int(rng.below(6));  // exhaustive subsets, so keep n <= 7
        Graph g = random_connected_graph(rng, n, 0.35);
        DistanceMatrix d = all_pairs_distances(g);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) s.add(v);
            bool wc = is_weakly_convex(g, d, s);
            bool cv = is_convex(g, d, s);
            REQUIRE(wc == wcon_by_paths(g, s));
            REQUIRE(cv == convex_by_paths(g, s));
            // hierarchy: convex => weakly convex => connected
            if (cv) REQUIRE(wc);
            if (wc) REQUIRE(is_connected_set(g, s));
        }
    }
}

TEST_CASE("interval is the union of geodesics", "[geodesic]") {
    Rng rng(777);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + int(rng.below(7));
        Graph g = random_connected_graph(rng, n, 0.3);
        DistanceMatrix d = all_pairs_distances(g);
        int u = int(rng.below(std::uint32_t(n))), v = int(rng.below(std::uint32_t(n)));
        VertexSet iv = interval(d, u, v);
        VertexSet from_paths(n);
        for (const auto& path : enumerate_geodesics(g, u, v))
            for (int w : path) from_paths.add(w);
        REQUIRE(iv == from_paths);
    }
}

TEST_CASE("weakly convex and convex sets lift into the identity prism", "[geodesic]") {
    Rng rng(1848);
    int checked = 0;
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + int(rng.below(5));  // n <= 6
        Graph g = random_connected_graph(rng, n, 0.35);
        DistanceMatrix d = all_pairs_distances(g);
        PrismGraph pg = identity_prism(g);
        DistanceMatrix dp = all_pairs_distances(pg.graph);
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) s.add(v);
            VertexSet lifted_s = lift_set(pg, s, VertexSet(n));
            VertexSet lifted_sp = lift_set(pg, VertexSet(n), s);
            VertexSet both = lift_set(pg, s, s);
            if (is_weakly_convex(g, d, s)) {
                REQUIRE(is_weakly_convex(pg.graph, dp, lifted_s));
                REQUIRE(is_weakly_convex(pg.graph, dp, lifted_sp));
                REQUIRE(is_weakly_convex(pg.graph, dp, both));
                ++checked;
            }
            if (is_convex(g, d, s)) {
                REQUIRE(is_convex(pg.graph, dp, lifted_s));
                REQUIRE(is_convex(pg.graph, dp, lifted_sp));
                REQUIRE(is_convex(pg.graph, dp, both));
            }
        }
    }
    REQUIRE(checked > 100);
}
